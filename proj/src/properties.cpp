#include "hap/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hap/error.hpp"
#include "hap/hereditary.hpp"
#include "hap/tuple_search.hpp"

namespace hap {

std::string to_string(Property p) { return p == Property::P ? "P" : "Q"; }
std::string to_string(CheckMode m) { return m == CheckMode::Exact ? "exact" : "refute"; }

int q_union_limit(int m, int k) {
  int total = 0;
  for (int i = 1; i <= k && i <= m; ++i) total += m / i;
  return total;
}

bool violates_p(std::span<const FiniteSet> tuple, int m) {
  const int k = static_cast<int>(tuple.size());
  FiniteSet once, twice;
  for (const auto& s : tuple) {
    twice |= once & s;
    once |= s;
  }
  return std::all_of(tuple.begin(), tuple.end(), [&](const FiniteSet& s) { return (s - twice).size() > m / k; });
}

bool violates_q(std::span<const FiniteSet> tuple, int m) {
  FiniteSet u;
  for (const auto& s : tuple) u |= s;
  return u.size() > q_union_limit(m, static_cast<int>(tuple.size()));
}

namespace {

void require_uniform(const SetFamily& family, int m) {
  require(m >= 1, ErrorKind::Input, "m must be positive");
  for (std::size_t i = 0; i < family.sets.size(); ++i)
    require(family.sets[i].size() == m, ErrorKind::Input,
            "member " + std::to_string(i + 1) + " has " + std::to_string(family.sets[i].size()) +
                " elements; the family must be " + std::to_string(m) + "-uniform");
}

PropertyVerdict make_verdict(Property property, CheckMode mode, const std::vector<FiniteSet>& sets,
                             const std::optional<std::vector<int>>& witness) {
  PropertyVerdict v;
  v.property = property;
  v.mode = mode;
  v.holds = !witness;
  if (witness) {
    v.k = static_cast<int>(witness->size());
    v.witness_indices = *witness;
    for (int i : *witness) v.witness_sets.push_back(sets[static_cast<std::size_t>(i)]);
  }
  return v;
}

std::vector<FiniteSet> pick(const std::vector<FiniteSet>& sets, std::span<const int> idx) {
  std::vector<FiniteSet> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(sets[static_cast<std::size_t>(i)]);
  return out;
}

std::optional<std::vector<int>> exact_p(const std::vector<FiniteSet>& sets, int m, std::uint64_t budget_limit) {
  kernels::NodeBudget budget(budget_limit);
  const int n = static_cast<int>(sets.size());
  for (int k = 2; k <= std::min(n, m + 1); ++k) {
    auto found = kernels::find_private_tuple_parallel(sets, k, m / k, &budget);
    if (budget.exhausted) fail(ErrorKind::ModeInfeasible, "exact property-P check exceeded its node budget");
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> exact_q(const std::vector<FiniteSet>& sets, int m, std::uint64_t budget_limit) {
  kernels::NodeBudget budget(budget_limit);
  const int n = static_cast<int>(sets.size());
  FiniteSet all;
  for (const auto& s : sets) all |= s;
  for (int k = 2; k <= n; ++k) {
    const int limit = q_union_limit(m, k);
    // The limit never decreases in k, so nothing larger can violate.
    if (all.size() <= limit) break;
    auto found = kernels::find_wide_tuple_parallel(sets, k, limit, &budget);
    if (budget.exhausted) fail(ErrorKind::ModeInfeasible, "exact property-Q check exceeded its node budget");
    if (found) return found;
  }
  return std::nullopt;
}

// Random k-subset of [0, n) by Floyd's algorithm, sorted.
std::vector<int> random_tuple(int n, int k, std::mt19937_64& rng) {
  std::vector<int> out;
  for (int j = n - k; j < n; ++j) {
    std::uniform_int_distribution<int> d(0, j);
    int t = d(rng);
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
    else
      out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Bad>
std::optional<std::vector<int>> sampled(int n, std::uint64_t samples, std::uint64_t seed, int fixed_k, Bad&& bad) {
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::optional<std::vector<int>>> per_chunk(chunks);
  std::atomic<std::uint64_t> first_bad{chunks};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto chunk = static_cast<std::uint64_t>(c);
    if (chunk > first_bad.load(std::memory_order_relaxed)) continue;
    std::seed_seq seq{seed, chunk, static_cast<std::uint64_t>(fixed_k)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> size_dist(1, n);
    const std::uint64_t end = std::min(samples, (chunk + 1) * kChunk);
    for (std::uint64_t s = chunk * kChunk; s < end; ++s) {
      int k = fixed_k > 0 ? fixed_k : size_dist(rng);
      auto tuple = random_tuple(n, k, rng);
      if (bad(tuple)) {
        per_chunk[chunk] = std::move(tuple);
        auto cur = first_bad.load();
        while (chunk < cur && !first_bad.compare_exchange_weak(cur, chunk)) {
        }
        break;
      }
    }
  }
  for (auto& r : per_chunk)
    if (r) return r;
  return std::nullopt;
}

PropertyVerdict check(const SetFamily& family, int m, CheckMode mode, const CheckConfig& config, Property property) {
  require_uniform(family, m);
  const auto sets = family.normalized().sets;
  const int n = static_cast<int>(sets.size());
  auto bad = [&](std::span<const int> idx) {
    auto tuple = pick(sets, idx);
    return property == Property::P ? violates_p(tuple, m) : violates_q(tuple, m);
  };

  if (mode == CheckMode::Exact) {
    auto w = property == Property::P ? exact_p(sets, m, config.node_budget) : exact_q(sets, m, config.node_budget);
    return make_verdict(property, mode, sets, w);
  }

  auto w = kernels::first_small_tuple(n, config.small_tuples, bad);
  std::uint64_t checked = config.samples;
  if (!w && n > 0) w = sampled(n, config.samples, config.seed, 0, bad);
  if (!w && property == Property::P && n >= m + 1) {
    // k = m + 1: a violation is exactly a disjointly representable (m+1)-tuple.
    w = sampled(n, config.samples, config.seed, m + 1, bad);
    checked += config.samples;
  }
  auto v = make_verdict(property, mode, sets, w);
  v.tuples_checked = checked;
  return v;
}

}  // namespace

PropertyVerdict has_property_p(const SetFamily& family, int m, CheckMode mode, const CheckConfig& config) {
  return check(family, m, mode, config, Property::P);
}

PropertyVerdict has_property_q(const SetFamily& family, int m, CheckMode mode, const CheckConfig& config) {
  return check(family, m, mode, config, Property::Q);
}

PropertyVerdict reference::has_property_bruteforce(const SetFamily& family, int m, Property property) {
  require_uniform(family, m);
  const auto sets = family.normalized().sets;
  require(sets.size() <= 20, ErrorKind::ModeInfeasible, "brute-force property check is limited to 20 members");
  auto w = reference::first_bad_subset(static_cast<int>(sets.size()), [&](const std::vector<int>& idx) {
    auto tuple = pick(sets, idx);
    return property == Property::P ? violates_p(tuple, m) : violates_q(tuple, m);
  });
  return make_verdict(property, CheckMode::Exact, sets, w);
}

bool union_bound_check(const SetFamily& family, int m) {
  require(m >= 1, ErrorKind::Input, "m must be positive");
  const double bound = m * (std::log(static_cast<double>(m)) + 1.0);
  return family.union_all().size() <= bound + 1e-9;
}

SetFamily h_construction(int m) {
  require(m >= 1, ErrorKind::Input, "m must be positive");
  require(m <= kMaxHConstruction, ErrorKind::BudgetExceeded,
          "h construction is limited to m <= " + std::to_string(kMaxHConstruction));
  const int n = 3 * m / 2;
  return SetFamily::uniform(m, all_k_subsets(n, m), n);
}

namespace {

FamilyOracleResult family_oracle(int m, int universe, const OracleBudget& budget, Property property) {
  require(m >= 1 && universe >= 1, ErrorKind::Input, "m and universe must be positive");
  require(universe <= 24, ErrorKind::BudgetExceeded, "oracle universe is limited to 24");
  if (budget.exhaustive)
    require(m <= 2 && universe <= 5, ErrorKind::BudgetExceeded,
            "exhaustive g/h oracles are limited to m <= 2 and universe <= 5");
  const auto candidates = all_k_subsets(universe, m);
  auto accept = [&](const std::vector<int>& chosen, int c) {
    std::vector<FiniteSet> sets = pick(candidates, chosen);
    sets.push_back(candidates[static_cast<std::size_t>(c)]);
    const int forced = static_cast<int>(sets.size()) - 1;
    const int n = static_cast<int>(sets.size());
    if (property == Property::P) {
      for (int k = 2; k <= std::min(n, m + 1); ++k)
        if (kernels::find_private_tuple(sets, k, m / k, forced)) return false;
      return true;
    }
    for (int k = 2; k <= n; ++k)
      if (kernels::find_wide_tuple(sets, k, q_union_limit(m, k), forced)) return false;
    return true;
  };
  auto found = max_hereditary_family(static_cast<int>(candidates.size()), accept, true, budget.node_limit);
  FamilyOracleResult r;
  r.value = static_cast<int>(found.chosen.size());
  r.witness = SetFamily::uniform(m, pick(candidates, found.chosen), universe);
  r.exact = found.exact;
  r.nodes = found.nodes;
  return r;
}

}  // namespace

FamilyOracleResult g_oracle(int m, int universe, const OracleBudget& budget) {
  return family_oracle(m, universe, budget, Property::P);
}

FamilyOracleResult h_oracle(int m, int universe, const OracleBudget& budget) {
  return family_oracle(m, universe, budget, Property::Q);
}

}  // namespace hap
