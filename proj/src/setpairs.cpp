#include "hap/setpairs.hpp"

#include <algorithm>
#include <numeric>

#include "hap/error.hpp"
#include "hap/hereditary.hpp"
#include "hap/tuple_search.hpp"

namespace hap {

std::string to_string(const PairKind& kind) {
  switch (kind.tag) {
    case PairKind::Tag::Bollobas: return "bollobas";
    case PairKind::Tag::Skew: return "skew";
    case PairKind::Tag::IntersectingBollobas: return "intersecting-bollobas";
    case PairKind::Tag::TIntersectingBollobas: return "t-intersecting-bollobas(" + std::to_string(kind.t) + ")";
  }
  return "unknown";
}

PairKind pair_kind_from_string(const std::string& s) {
  if (s == "bollobas") return PairKind::bollobas();
  if (s == "skew") return PairKind::skew();
  if (s == "intersecting-bollobas") return PairKind::intersecting();
  const std::string prefix = "t-intersecting-bollobas(";
  if (s.starts_with(prefix) && s.ends_with(")")) {
    try {
      int t = std::stoi(s.substr(prefix.size(), s.size() - prefix.size() - 1));
      if (t >= 1) return PairKind::t_intersecting(t);
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::Input, "unknown set-pair kind '" + s + "'");
}

std::optional<std::pair<int, int>> find_kind_violation(const SetPairSystem& system, const PairKind& kind) {
  const auto& p = system.pairs;
  const int n = static_cast<int>(p.size());
  using Tag = PairKind::Tag;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool meets = p[i].a.intersects(p[j].b);
      if (kind.tag == Tag::Skew) {
        if (i == j && meets) return std::pair{i, j};
        if (i < j && !meets) return std::pair{i, j};
        continue;
      }
      if ((i == j) == meets) return std::pair{i, j};
      if (kind.tag == Tag::IntersectingBollobas && !p[i].a.intersects(p[j].a)) return std::pair{i, j};
      if (kind.tag == Tag::TIntersectingBollobas && p[i].a.intersection_size(p[j].a) < kind.t)
        return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> is_disjointly_representable(const std::vector<FiniteSet>& sets) {
  require(!sets.empty(), ErrorKind::Input, "need at least one set");
  FiniteSet once, twice;
  for (const auto& s : sets) {
    twice |= once & s;
    once |= s;
  }
  std::vector<int> reps;
  for (const auto& s : sets) {
    int e = (s - twice).min();
    if (e == 0) return std::nullopt;
    reps.push_back(e);
  }
  return reps;
}

SetPairSystem minimal_transversals(const SetFamily& family) {
  const auto& f = family.sets;
  const int n = static_cast<int>(f.size());
  SetPairSystem out;
  out.kind = PairKind::bollobas();
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      require(!f[j].subset_of(f[i]), ErrorKind::NoTransversal,
              "member " + std::to_string(j + 1) + " is contained in member " + std::to_string(i + 1) +
                  ", so no transversal avoids it");
      others.push_back(j);
    }
    std::stable_sort(others.begin(), others.end(),
                     [&](int x, int y) { return (f[x] - f[i]).size() < (f[y] - f[i]).size(); });
    FiniteSet e;
    std::vector<int> inserted;
    for (int j : others) {
      if (f[j].intersects(e)) continue;
      int x = (f[j] - f[i]).min();
      e.insert(x);
      inserted.push_back(x);
    }
    for (auto it = inserted.rbegin(); it != inserted.rend(); ++it) {
      FiniteSet trial = e;
      trial.erase(*it);
      if (std::all_of(others.begin(), others.end(), [&](int j) { return f[j].intersects(trial); })) e = trial;
    }
    out.pairs.push_back({f[i], e});
  }
  return out;
}

Rational bollobas_sum(const SetPairSystem& system) {
  if (auto v = find_kind_violation(system, PairKind::bollobas()))
    fail(ErrorKind::KindViolation, "Bollobás condition fails at pair (" + std::to_string(v->first + 1) + ", " +
                                       std::to_string(v->second + 1) + ")");
  Rational sum = 0;
  for (const auto& p : system.pairs) {
    auto a = static_cast<std::uint64_t>(p.a.size());
    auto b = static_cast<std::uint64_t>(p.b.size());
    sum += Rational(BigCount(1), binom(a + b, b));
  }
  return sum;
}

bool check_skew_cross_intersecting(const SetPairSystem& system) {
  return !find_kind_violation(system, PairKind::skew());
}

SetPairSystem skew_double(const SetPairSystem& system) {
  if (auto v = find_kind_violation(system, PairKind::intersecting()))
    fail(ErrorKind::KindViolation, "skew doubling needs an intersecting Bollobás system; fails at pair (" +
                                       std::to_string(v->first + 1) + ", " + std::to_string(v->second + 1) + ")");
  SetPairSystem out;
  out.kind = PairKind::skew();
  out.pairs = system.pairs;
  for (auto it = system.pairs.rbegin(); it != system.pairs.rend(); ++it) out.pairs.push_back({it->b, it->a});
  return out;
}

DrFreeResult max_dr_free_family_oracle(int r, int k, int universe, bool exhaustive, std::uint64_t node_limit) {
  require(r >= 1 && k >= 1 && universe >= 1, ErrorKind::Input, "r, k and universe must be positive");
  require(universe <= 24, ErrorKind::BudgetExceeded, "oracle universe is limited to 24");
  if (exhaustive)
    require(r <= 2 && k <= 3 && universe <= 6, ErrorKind::BudgetExceeded,
            "exhaustive DR-free oracle is limited to r <= 2, k <= 3, universe <= 6");
  const auto candidates = all_k_subsets(universe, r);
  auto accept = [&](const std::vector<int>& chosen, int c) {
    std::vector<FiniteSet> sets;
    for (int i : chosen) sets.push_back(candidates[static_cast<std::size_t>(i)]);
    sets.push_back(candidates[static_cast<std::size_t>(c)]);
    return !kernels::find_private_tuple(sets, k, 0, static_cast<int>(sets.size()) - 1);
  };
  auto found = max_hereditary_family(static_cast<int>(candidates.size()), accept, true, node_limit);
  DrFreeResult res;
  res.r = r;
  res.k = k;
  res.universe = universe;
  res.value = static_cast<int>(found.chosen.size());
  std::vector<FiniteSet> w;
  for (int i : found.chosen) w.push_back(candidates[static_cast<std::size_t>(i)]);
  res.witness = SetFamily::uniform(r, std::move(w), universe);
  res.exact = found.exact;
  res.bound = binom(static_cast<std::uint64_t>(r + k - 1), static_cast<std::uint64_t>(k - 1));
  res.nodes = found.nodes;
  return res;
}

SetFamily restrict_family(const SetFamily& family, const FiniteSet& y) {
  SetFamily out;
  out.universe = family.universe;
  for (const auto& f : family.sets)
    if (y.subset_of(f)) out.sets.push_back(f - y);
  out.normalize();
  return out;
}

PigeonholeReport pigeonhole_restriction(const SetFamily& family, const FiniteSet& x, int slack) {
  const int xs = x.size();
  require(slack >= 0 && slack <= xs, ErrorKind::Input, "slack must lie in [0, |X|]");
  PigeonholeReport rep;
  rep.choices = binom(static_cast<std::uint64_t>(xs), static_cast<std::uint64_t>(slack));
  rep.premise = std::all_of(family.sets.begin(), family.sets.end(),
                            [&](const FiniteSet& f) { return f.intersection_size(x) >= xs - slack; });
  const auto xe = x.elements();
  bool first = true;
  for (const auto& pos : all_k_subsets(xs, xs - slack)) {
    FiniteSet y;
    pos.for_each([&](int p) { y.insert(xe[static_cast<std::size_t>(p - 1)]); });
    const auto restricted = restrict_family(family, y).size();
    if (first || restricted > rep.restricted_size) {
      rep.best_y = y;
      rep.restricted_size = restricted;
      first = false;
    }
  }
  rep.holds = BigCount(family.normalized().size()) <= BigCount(rep.restricted_size) * rep.choices;
  return rep;
}

}  // namespace hap
