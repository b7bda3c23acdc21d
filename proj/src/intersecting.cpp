#include "hap/intersecting.hpp"

#include <algorithm>

#include "hap/clique.hpp"
#include "hap/error.hpp"
#include "hap/hereditary.hpp"
#include "hap/tuple_search.hpp"

namespace hap {

namespace {

void require_nkt(int n, int k, int t) {
  require(t >= 0 && t <= k && k <= n, ErrorKind::Input,
          "need 0 <= t <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + std::to_string(t));
}

}  // namespace

BigCount frankl_family_size(int n, int k, int t, int r) {
  require_nkt(n, k, t);
  require(r >= 0 && t + 2 * r <= n, ErrorKind::Input,
          "r=" + std::to_string(r) + " outside [0, (n - t) / 2]");
  const int core = t + 2 * r;
  BigCount total = 0;
  for (int j = t + r; j <= std::min(k, core); ++j)
    total += binom(static_cast<std::uint64_t>(core), static_cast<std::uint64_t>(j)) *
             binom(static_cast<std::uint64_t>(n - core), static_cast<std::uint64_t>(k - j));
  return total;
}

BigCount reference::frankl_family_size_enumerated(int n, int k, int t, int r) {
  require(n <= 16, ErrorKind::BudgetExceeded, "enumeration limited to n <= 16");
  const FiniteSet core = FiniteSet::interval(t + 2 * r);
  BigCount count = 0;
  for (const auto& f : all_k_subsets(n, k))
    if (f.intersection_size(core) >= t + r) ++count;
  return count;
}

BigCount ak_by_clique(int n, int k, int t) {
  require_nkt(n, k, t);
  require(binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) <= 4096, ErrorKind::BudgetExceeded,
          "clique crosscheck needs a small vertex set");
  const auto vertices = all_k_subsets(n, k);
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i].intersection_size(vertices[j]) >= t) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return static_cast<long>(max_clique(g).clique.size());
}

BigCount ak(int n, int k, int t, bool crosscheck) {
  require(t >= 1, ErrorKind::Input, "ak requires t >= 1");
  require_nkt(n, k, t);
  BigCount best = 0;
  for (int r = 0; t + 2 * r <= n; ++r) best = std::max(best, frankl_family_size(n, k, t, r));
  if (crosscheck && binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) <= kMaxCliqueCrosscheck) {
    BigCount brute = ak_by_clique(n, k, t);
    require(brute == best, ErrorKind::Internal,
            "AK crosscheck mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" +
                std::to_string(t) + ": formula " + best.str() + " vs clique " + brute.str());
  }
  return best;
}

FiScan fi_family_scan(int m) {
  require(m >= 1 && m <= 64, ErrorKind::Input, "fi scan requires 1 <= m <= 64");
  FiScan scan;
  scan.m = m;
  scan.t = (m + 1) / 2;
  const int last = std::min(m / 2, (2 * m - scan.t) / 2);
  for (int i = 0; i <= last; ++i) scan.sizes.push_back(frankl_family_size(2 * m, m, scan.t, i));
  scan.argmax = static_cast<int>(std::max_element(scan.sizes.begin(), scan.sizes.end()) - scan.sizes.begin());
  return scan;
}

namespace {

ConjectureSearchResult pair_search(int a, int b, int t, int u, const SearchBudget& budget,
                                   ConjectureSearchResult::Which which) {
  require(a >= 1 && a <= b, ErrorKind::Input, "need 1 <= a <= b");
  require(t >= 1 && t <= a, ErrorKind::Input, "need 1 <= t <= a");
  require(u >= 1 && u <= 24, ErrorKind::Input, "universe must lie in [1, 24]");
  if (budget.exhaustive)
    require(a + b <= 5 && u <= a + b + 1, ErrorKind::BudgetExceeded,
            "exhaustive conjecture search is limited to a + b <= 5 and u <= a + b + 1");

  ConjectureSearchResult res;
  res.which = which;
  res.a = a;
  res.b = b;
  res.t = t;
  res.universe = u;
  res.witness.kind = which == ConjectureSearchResult::Which::Tuz ? PairKind::intersecting() : PairKind::t_intersecting(t);
  res.known_bound = binom(static_cast<std::uint64_t>(a + b), static_cast<std::uint64_t>(a)) / 2;
  res.conjectured_bound = which == ConjectureSearchResult::Which::Tuz
                              ? binom(static_cast<std::uint64_t>(a + b - 1), static_cast<std::uint64_t>(a - 1))
                              : ak(a + b, a, t);
  res.exact = true;

  if (u >= a + b) {
    // Vertices are admissible pairs; vertex 0 is ([a], [a+1, a+b]), which any
    // nonempty system contains after relabeling the ground set.
    std::vector<SetPair> vertices;
    const SetPair root{FiniteSet::interval(a), FiniteSet::interval(a + b) - FiniteSet::interval(a)};
    vertices.push_back(root);
    for (const auto& sa : all_k_subsets(u, a))
      for (const auto& sb : all_k_subsets(u, b))
        if (!sa.intersects(sb) && !(SetPair{sa, sb} == root)) vertices.push_back({sa, sb});
    const int n = static_cast<int>(vertices.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto& p = vertices[static_cast<std::size_t>(i)];
        const auto& q = vertices[static_cast<std::size_t>(j)];
        if (p.a.intersects(q.b) && q.a.intersects(p.b) && p.a.intersection_size(q.a) >= t) g.add_edge(i, j);
      }
    std::vector<int> neighbours;
    for (int v = 1; v < n; ++v)
      if (g.edge(0, v)) neighbours.push_back(v);
    CliqueResult clique{};
    if (!neighbours.empty()) clique = max_clique_within(g, neighbours, budget.node_limit);
    res.witness.pairs.push_back(root);
    for (int v : clique.clique) res.witness.pairs.push_back(vertices[static_cast<std::size_t>(v)]);
    res.max_found = static_cast<int>(res.witness.pairs.size());
    res.exact = clique.exact;
    res.nodes = clique.nodes;
  }
  res.counterexample = BigCount(res.max_found) > res.conjectured_bound;
  res.known_bound_respected = BigCount(res.max_found) <= res.known_bound;
  return res;
}

}  // namespace

ConjectureSearchResult conjecture_tuz_search(int a, int b, int u, const SearchBudget& budget) {
  return pair_search(a, b, 1, u, budget, ConjectureSearchResult::Which::Tuz);
}

ConjectureSearchResult conjecture_ak_search(int a, int b, int t, int u, const SearchBudget& budget) {
  return pair_search(a, b, t, u, budget, ConjectureSearchResult::Which::Ak);
}

JOracleResult j_oracle(int m, int u, const SearchBudget& budget) {
  require(m >= 1 && u >= 1, ErrorKind::Input, "m and u must be positive");
  require(u <= 24, ErrorKind::BudgetExceeded, "oracle universe is limited to 24");
  if (budget.exhaustive)
    require(m <= 2 && u <= 5, ErrorKind::BudgetExceeded, "exhaustive j oracle is limited to m <= 2 and u <= 5");
  const int t = (m + 1) / 2;
  const auto candidates = all_k_subsets(u, m);
  auto accept = [&](const std::vector<int>& chosen, int c) {
    const FiniteSet& s = candidates[static_cast<std::size_t>(c)];
    std::vector<FiniteSet> sets;
    for (int i : chosen) {
      if (candidates[static_cast<std::size_t>(i)].intersection_size(s) < t) return false;
      sets.push_back(candidates[static_cast<std::size_t>(i)]);
    }
    sets.push_back(s);
    return !kernels::find_private_tuple(sets, m + 1, 0, static_cast<int>(sets.size()) - 1);
  };
  auto found = max_hereditary_family(static_cast<int>(candidates.size()), accept, true, budget.node_limit);
  JOracleResult res;
  res.m = m;
  res.universe = u;
  res.value = static_cast<int>(found.chosen.size());
  std::vector<FiniteSet> w;
  for (int i : found.chosen) w.push_back(candidates[static_cast<std::size_t>(i)]);
  res.witness = SetFamily::uniform(m, std::move(w), u);
  res.exact = found.exact;
  res.bound = binom(2 * static_cast<std::uint64_t>(m) - 1, static_cast<std::uint64_t>(m));
  res.nodes = found.nodes;
  return res;
}

}  // namespace hap
