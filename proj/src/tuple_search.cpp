#include "hap/tuple_search.hpp"

#include <algorithm>

namespace hap::kernels {

int private_count(std::span<const FiniteSet> sets, std::span<const int> tuple, std::size_t j) {
  FiniteSet others;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (i != j) others |= sets[static_cast<std::size_t>(tuple[i])];
  return (sets[static_cast<std::size_t>(tuple[j])] - others).size();
}

namespace {

class PrivateDfs {
 public:
  PrivateDfs(std::span<const FiniteSet> sets, int k, int threshold, int forced, NodeBudget* budget)
      : sets_(sets), k_(k), threshold_(threshold), forced_(forced), budget_(budget) {}

  // Tries to extend `tuple` (with coverage once/twice) using members >= start.
  bool extend(int start, const FiniteSet& once, const FiniteSet& twice) {
    const int n = static_cast<int>(sets_.size());
    const bool has_forced = forced_ < 0 || std::find(tuple_.begin(), tuple_.end(), forced_) != tuple_.end();
    const int last = has_forced ? n - 1 : forced_;
    for (int c = start; c <= last; ++c) {
      if (n - c < k_ - static_cast<int>(tuple_.size())) break;
      if (budget_ && !budget_->spend()) return false;
      const FiniteSet& fc = sets_[static_cast<std::size_t>(c)];
      FiniteSet next_twice = twice | (once & fc);
      if (!all_private(c, next_twice)) continue;
      tuple_.push_back(c);
      if (static_cast<int>(tuple_.size()) == k_) {
        if (has_forced || c == forced_) return true;
        tuple_.pop_back();
        continue;
      }
      if (extend(c + 1, once | fc, next_twice)) return true;
      tuple_.pop_back();
    }
    return false;
  }

  bool seed_with(int root) {
    const FiniteSet& f = sets_[static_cast<std::size_t>(root)];
    if (f.size() <= threshold_) return false;
    tuple_.assign(1, root);
    return k_ == 1 || extend(root + 1, f, FiniteSet{});
  }

  std::vector<int>& tuple() { return tuple_; }

 private:
  bool all_private(int c, const FiniteSet& twice) const {
    if ((sets_[static_cast<std::size_t>(c)] - twice).size() <= threshold_) return false;
    for (int j : tuple_)
      if ((sets_[static_cast<std::size_t>(j)] - twice).size() <= threshold_) return false;
    return true;
  }

  std::span<const FiniteSet> sets_;
  int k_;
  int threshold_;
  int forced_;
  NodeBudget* budget_;
  std::vector<int> tuple_;
};

class WideDfs {
 public:
  WideDfs(std::span<const FiniteSet> sets, int k, int limit, int forced, NodeBudget* budget)
      : sets_(sets), k_(k), limit_(limit), forced_(forced), budget_(budget), suffix_(sets.size() + 1) {
    for (std::size_t i = sets.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | sets[i];
      widest_ = std::max(widest_, sets[i].size());
    }
  }

  bool extend(int start, const FiniteSet& covered) {
    const int n = static_cast<int>(sets_.size());
    const bool has_forced = forced_ < 0 || std::find(tuple_.begin(), tuple_.end(), forced_) != tuple_.end();
    const int last = has_forced ? n - 1 : forced_;
    const int missing = k_ - static_cast<int>(tuple_.size());
    if (missing == 0) return has_forced && covered.size() > limit_;
    if (covered.size() + missing * widest_ <= limit_) return false;
    if (start < n && (covered | suffix_[static_cast<std::size_t>(start)]).size() <= limit_) return false;
    for (int c = start; c <= last; ++c) {
      if (n - c < missing) break;
      if (budget_ && !budget_->spend()) return false;
      tuple_.push_back(c);
      if (extend(c + 1, covered | sets_[static_cast<std::size_t>(c)])) return true;
      tuple_.pop_back();
    }
    return false;
  }

  std::vector<int>& tuple() { return tuple_; }

 private:
  std::span<const FiniteSet> sets_;
  int k_;
  int limit_;
  int forced_;
  NodeBudget* budget_;
  std::vector<FiniteSet> suffix_;
  int widest_ = 0;
  std::vector<int> tuple_;
};

template <class Search>
std::optional<std::vector<int>> over_roots(int n, int k, Search&& run_root) {
  if (k < 1 || k > n) return std::nullopt;
  std::vector<std::optional<std::vector<int>>> per_root(static_cast<std::size_t>(n));
  std::atomic<int> best_root{n};
#pragma omp parallel for schedule(dynamic)
  for (int root = 0; root <= n - k; ++root) {
    if (root > best_root.load(std::memory_order_relaxed)) continue;
    auto found = run_root(root);
    if (!found) continue;
    per_root[static_cast<std::size_t>(root)] = std::move(found);
    int cur = best_root.load();
    while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
    }
  }
  for (auto& r : per_root)
    if (r) return r;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_private_tuple(std::span<const FiniteSet> sets, int k, int threshold, int forced,
                                                   NodeBudget* budget) {
  if (k < 1 || k > static_cast<int>(sets.size())) return std::nullopt;
  PrivateDfs dfs(sets, k, threshold, forced, budget);
  if (dfs.extend(0, FiniteSet{}, FiniteSet{})) return dfs.tuple();
  return std::nullopt;
}

std::optional<std::vector<int>> find_private_tuple_parallel(std::span<const FiniteSet> sets, int k, int threshold,
                                                            NodeBudget* budget) {
  return over_roots(static_cast<int>(sets.size()), k, [&](int root) -> std::optional<std::vector<int>> {
    PrivateDfs dfs(sets, k, threshold, -1, budget);
    if (dfs.seed_with(root)) return dfs.tuple();
    return std::nullopt;
  });
}

std::optional<std::vector<int>> find_wide_tuple(std::span<const FiniteSet> sets, int k, int limit, int forced,
                                                NodeBudget* budget) {
  if (k < 1 || k > static_cast<int>(sets.size())) return std::nullopt;
  WideDfs dfs(sets, k, limit, forced, budget);
  if (dfs.extend(0, FiniteSet{})) return dfs.tuple();
  return std::nullopt;
}

std::optional<std::vector<int>> find_wide_tuple_parallel(std::span<const FiniteSet> sets, int k, int limit,
                                                         NodeBudget* budget) {
  return over_roots(static_cast<int>(sets.size()), k, [&](int root) -> std::optional<std::vector<int>> {
    WideDfs dfs(sets, k, limit, -1, budget);
    dfs.tuple().push_back(root);
    if (dfs.extend(root + 1, sets[static_cast<std::size_t>(root)])) return dfs.tuple();
    return std::nullopt;
  });
}

}  // namespace hap::kernels
