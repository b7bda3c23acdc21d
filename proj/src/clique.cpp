#include "hap/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "hap/error.hpp"

namespace hap {

namespace {

using Bits = std::vector<std::uint64_t>;

bool none(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}
int lowest(const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) return static_cast<int>(i * 64) + std::countr_zero(b[i]);
  return -1;
}
void clear(Bits& b, int v) { b[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

// Greedy colouring in vertex order; `order` lists vertices by colour class and
// `bound[i]` is the colour of order[i], an upper bound on any clique in order[0..i].
void colour_sort(const Graph& g, const Bits& candidates, std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  Bits uncoloured = candidates;
  int colour = 0;
  while (!none(uncoloured)) {
    ++colour;
    Bits q = uncoloured;
    while (!none(q)) {
      int v = lowest(q);
      clear(q, v);
      clear(uncoloured, v);
      const auto* nv = g.row(v);
      for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~nv[w];
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

class Expander {
 public:
  Expander(const Graph& g, std::atomic<int>& shared_best, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& exhausted, std::uint64_t limit)
      : g_(g), shared_(shared_best), nodes_(nodes), exhausted_(exhausted), limit_(limit) {}

  void expand(Bits candidates) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= limit_) {
      exhausted_.store(true);
      return;
    }
    std::vector<int> order, bound;
    colour_sort(g_, candidates, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      const int reach = static_cast<int>(current_.size()) + bound[static_cast<std::size_t>(i)];
      if (reach <= static_cast<int>(best_.size()) || reach < shared_.load(std::memory_order_relaxed)) return;
      if (exhausted_.load(std::memory_order_relaxed)) return;
      const int v = order[static_cast<std::size_t>(i)];
      current_.push_back(v);
      Bits next = candidates;
      const auto* nv = g_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= nv[w];
      if (none(next)) {
        if (current_.size() > best_.size()) record();
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      clear(candidates, v);
    }
  }

  void start_with(int v) {
    current_.assign(1, v);
    if (best_.empty()) record();
  }
  const std::vector<int>& best() const { return best_; }

 private:
  void record() {
    best_ = current_;
    int mine = static_cast<int>(best_.size());
    int cur = shared_.load();
    while (mine > cur && !shared_.compare_exchange_weak(cur, mine)) {
    }
  }

  const Graph& g_;
  std::atomic<int>& shared_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& exhausted_;
  std::uint64_t limit_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

CliqueResult max_clique_within(const Graph& g, const std::vector<int>& allowed, std::uint64_t node_limit) {
  Bits all(static_cast<std::size_t>(g.words()), 0);
  for (int v : allowed) all[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  std::vector<int> order, bound;
  colour_sort(g, all, order, bound);

  const int roots = static_cast<int>(order.size());
  std::atomic<int> shared{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::vector<std::vector<int>> per_root(static_cast<std::size_t>(roots));

  // Root i takes order[i] together with vertices earlier in the colour order.
#pragma omp parallel for schedule(dynamic)
  for (int i = roots - 1; i >= 0; --i) {
    if (bound[static_cast<std::size_t>(i)] < shared.load(std::memory_order_relaxed)) continue;
    const int v = order[static_cast<std::size_t>(i)];
    Bits candidates(all.size(), 0);
    for (int j = 0; j < i; ++j) {
      int u = order[static_cast<std::size_t>(j)];
      candidates[static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    const auto* nv = g.row(v);
    for (std::size_t w = 0; w < candidates.size(); ++w) candidates[w] &= nv[w];
    Expander ex(g, shared, nodes, exhausted, node_limit);
    ex.start_with(v);
    if (!none(candidates)) ex.expand(std::move(candidates));
    per_root[static_cast<std::size_t>(i)] = ex.best();
  }

  CliqueResult result;
  for (int i = roots - 1; i >= 0; --i)
    if (per_root[static_cast<std::size_t>(i)].size() > result.clique.size()) result.clique = per_root[static_cast<std::size_t>(i)];
  std::sort(result.clique.begin(), result.clique.end());
  result.exact = !exhausted.load();
  result.nodes = nodes.load();
  return result;
}

CliqueResult max_clique(const Graph& g, std::uint64_t node_limit) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) all[static_cast<std::size_t>(v)] = v;
  return max_clique_within(g, all, node_limit);
}

int reference::max_clique_size_bruteforce(const Graph& g) {
  const int n = g.size();
  require(n <= 20, ErrorKind::BudgetExceeded, "brute-force clique search is limited to 20 vertices");
  int best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1U) && (mask >> v & 1U) && !g.edge(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

}  // namespace hap
