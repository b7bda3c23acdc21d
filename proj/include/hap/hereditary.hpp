#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

// Branch and bound for the largest subfamily of a candidate list under a
// hereditary constraint (closed under taking subfamilies).

namespace hap {

struct HereditaryResult {
  std::vector<int> chosen;  ///< ascending candidate indices
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// `accept(chosen, c)` must say whether chosen ∪ {c} still satisfies the
/// constraint, given that `chosen` does; it is called concurrently. With
/// `force_first`, candidate 0 belongs to every explored family (symmetry
/// breaking; only valid when the constraint is invariant under a relabeling
/// that maps any member to candidate 0). Root branches run in parallel and
/// share the best size found for pruning; ties resolve to the lowest branch,
/// so the witness does not depend on scheduling.
template <class Accept>
HereditaryResult max_hereditary_family(int n, Accept&& accept, bool force_first, std::uint64_t node_limit) {
  HereditaryResult result;
  if (n == 0) return result;
  std::vector<int> base;
  if (force_first) {
    if (!accept(base, 0)) return result;
    base.push_back(0);
  }
  const int first_branch = force_first ? 1 : 0;
  // Branch b >= first_branch adds candidate b next; the extra last branch keeps `base` alone.
  const int branches = n - first_branch + 1;

  std::atomic<int> shared_best{static_cast<int>(base.size())};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::vector<std::vector<int>> best_of(static_cast<std::size_t>(branches));

#pragma omp parallel for schedule(dynamic)
  for (int br = 0; br < branches; ++br) {
    std::vector<int> chosen = base;
    auto& local = best_of[static_cast<std::size_t>(br)];
    local = base;
    if (br == branches - 1) continue;
    const int c0 = first_branch + br;
    if (!accept(chosen, c0)) continue;
    chosen.push_back(c0);

    auto dfs = [&](auto&& self, int next) -> void {
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= node_limit) {
        exhausted.store(true);
        return;
      }
      if (chosen.size() > local.size()) {
        local = chosen;
        int cur = shared_best.load();
        int mine = static_cast<int>(chosen.size());
        while (mine > cur && !shared_best.compare_exchange_weak(cur, mine)) {
        }
      }
      for (int c = next; c < n; ++c) {
        const int reach = static_cast<int>(chosen.size()) + (n - c);
        if (reach <= static_cast<int>(local.size()) || reach < shared_best.load(std::memory_order_relaxed)) break;
        if (exhausted.load(std::memory_order_relaxed)) return;
        if (!accept(chosen, c)) continue;
        chosen.push_back(c);
        self(self, c + 1);
        chosen.pop_back();
      }
    };
    dfs(dfs, c0 + 1);
  }

  for (const auto& b : best_of)
    if (b.size() > result.chosen.size()) result.chosen = b;
  if (result.chosen.empty()) result.chosen = base;
  result.exact = !exhausted.load();
  result.nodes = nodes.load();
  return result;
}

}  // namespace hap
