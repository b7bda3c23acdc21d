#pragma once

#include <algorithm>
#include <atomic>
#include <utility>

namespace hap::kernels {

template <class Pred>
std::optional<std::vector<int>> first_small_tuple(int n, int max_size, Pred&& bad) {
  for (int k = 1; k <= std::min(n, max_size); ++k) {
    std::vector<std::optional<std::vector<int>>> per_root(static_cast<std::size_t>(n));
    std::atomic<int> best_root{n};
#pragma omp parallel for schedule(dynamic)
    for (int root = 0; root <= n - k; ++root) {
      if (root > best_root.load(std::memory_order_relaxed)) continue;
      std::vector<int> tuple(static_cast<std::size_t>(k));
      tuple[0] = root;
      for (int i = 1; i < k; ++i) tuple[static_cast<std::size_t>(i)] = root + i;
      while (true) {
        if (bad(std::as_const(tuple))) {
          per_root[static_cast<std::size_t>(root)] = tuple;
          int cur = best_root.load();
          while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
          }
          break;
        }
        int i = k - 1;
        while (i >= 1 && tuple[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 1) break;
        ++tuple[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    for (auto& r : per_root)
      if (r) return r;
  }
  return std::nullopt;
}

}  // namespace hap::kernels
