#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hap/finite_set.hpp"

// Searches over k-tuples of distinct family members. Tuples are ascending
// index lists; "least" means lexicographically least among tuples of the
// requested size.

namespace hap::kernels {

/// Shared node counter; a search that overruns `limit` stops and reports it.
struct NodeBudget {
  std::uint64_t limit = UINT64_MAX;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};

  explicit NodeBudget(std::uint64_t l = UINT64_MAX) : limit(l) {}
  bool spend(std::uint64_t n = 1) {
    if (used.fetch_add(n, std::memory_order_relaxed) + n > limit) exhausted.store(true, std::memory_order_relaxed);
    return !exhausted.load(std::memory_order_relaxed);
  }
};

/// Elements of sets[j] covered by no other member of the tuple.
int private_count(std::span<const FiniteSet> sets, std::span<const int> tuple, std::size_t j);

/// Least k-tuple in which every member owns more than `threshold` private
/// elements. With `forced` >= 0 only tuples containing that index qualify.
/// Pruned depth-first search: adding members only shrinks private parts.
std::optional<std::vector<int>> find_private_tuple(std::span<const FiniteSet> sets, int k, int threshold,
                                                   int forced = -1, NodeBudget* budget = nullptr);

/// Same result, with the first tuple member distributed over OpenMP threads.
std::optional<std::vector<int>> find_private_tuple_parallel(std::span<const FiniteSet> sets, int k, int threshold,
                                                            NodeBudget* budget = nullptr);

/// Least k-tuple whose union has more than `limit` elements.
std::optional<std::vector<int>> find_wide_tuple(std::span<const FiniteSet> sets, int k, int limit, int forced = -1,
                                                NodeBudget* budget = nullptr);

std::optional<std::vector<int>> find_wide_tuple_parallel(std::span<const FiniteSet> sets, int k, int limit,
                                                         NodeBudget* budget = nullptr);

/// Visits every tuple of size 1..max_size in (size, lexicographic) order and
/// returns the first for which `bad` holds. Parallel over the first member.
template <class Pred>
std::optional<std::vector<int>> first_small_tuple(int n, int max_size, Pred&& bad);

}  // namespace hap::kernels

namespace hap::reference {

/// Plain scan over all 2^n subsets (n <= 20) of the least (size, lex) tuple
/// for which `bad(tuple)` holds.
template <class Pred>
std::optional<std::vector<int>> first_bad_subset(int n, Pred&& bad) {
  std::optional<std::vector<int>> best;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> tuple;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) tuple.push_back(i);
    if (best && (tuple.size() > best->size() || (tuple.size() == best->size() && tuple >= *best))) continue;
    if (bad(tuple)) best = std::move(tuple);
  }
  return best;
}

}  // namespace hap::reference

#include "hap/detail/tuple_search_impl.hpp"
