#include "hap/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hap/error.hpp"
#include "hap/setcore.hpp"

namespace hap {

namespace {

BigCount power(int base, int exp) {
  BigCount r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::map<int, int> column_counts(const PreferenceProfile& profile, const std::vector<int>& rows, int col) {
  std::map<int, int> counts;
  for (int r : rows) ++counts[profile.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]];
  return counts;
}

}  // namespace

EllemParams default_ellem_params(int m) {
  int l = ell(static_cast<std::uint64_t>(m));
  return {l, std::max(l - 4, 0)};
}

EllemOutcome ellem_analyze(const PreferenceProfile& profile, const EllemParams& params) {
  profile.validate();
  require(params.L >= 1, ErrorKind::Input, "L must be positive");
  require(params.depth >= 0, ErrorKind::Input, "depth must be nonnegative");
  if (params.depth == 0) return Vacuous{"depth 0: the dichotomy has no content"};
  for (std::size_t b = 0; b < profile.rows.size(); ++b)
    require(static_cast<int>(profile.rows[b].size()) >= params.depth + 1, ErrorKind::Input,
            "row " + std::to_string(b + 1) + " is shorter than depth + 1");

  const int m = profile.m;
  RowChain chain;
  chain.levels.emplace_back(static_cast<std::size_t>(m));
  std::iota(chain.levels[0].begin(), chain.levels[0].end(), 0);

  FiniteSet first_column;
  for (const auto& row : profile.rows) first_column.insert(row.front());
  if (first_column.size() >= params.depth) return CommonCore{first_column, chain};

  for (int i = 0; i < params.depth; ++i) {
    const auto& rows = chain.levels.back();
    const auto counts = column_counts(profile, rows, i);
    const BigCount scale = power(params.L, i + 1);
    int chosen = 0;
    for (auto [house, count] : counts) {  // ascending house index
      if (count * scale >= m && count >= i + 1) {
        chosen = house;
        break;
      }
    }
    if (chosen == 0) {
      FiniteSet x;
      for (const auto& entry : counts) x.insert(entry.first);
      return LargeX{x, i, chain};
    }
    std::vector<int> next;
    for (int r : rows)
      if (profile.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] == chosen) next.push_back(r);
    chain.levels.push_back(std::move(next));
    chain.prefix.push_back(chosen);
  }
  FiniteSet core = first_column;
  for (int h : chain.prefix) core.insert(h);
  return CommonCore{core, chain};
}

bool verify_ellem_outcome(const PreferenceProfile& profile, const EllemOutcome& outcome) {
  if (std::holds_alternative<Vacuous>(outcome)) return true;
  const auto reachable = reachable_family_by_permutations(profile).family;
  if (const auto* cc = std::get_if<CommonCore>(&outcome)) {
    return std::all_of(reachable.sets.begin(), reachable.sets.end(),
                       [&](const FiniteSet& e) { return cc->core.subset_of(e); });
  }
  const auto& lx = std::get<LargeX>(outcome);
  const int need = lx.x_set.size() - lx.level;
  return std::all_of(reachable.sets.begin(), reachable.sets.end(),
                     [&](const FiniteSet& e) { return e.intersection_size(lx.x_set) >= need; });
}

bool chain_invariants_hold(const PreferenceProfile& profile, const RowChain& chain, int L) {
  if (chain.levels.empty()) return false;
  if (static_cast<int>(chain.prefix.size()) != chain.depth()) return false;
  std::vector<int> all(static_cast<std::size_t>(profile.m));
  std::iota(all.begin(), all.end(), 0);
  if (chain.levels[0] != all) return false;
  for (int i = 0; i <= chain.depth(); ++i) {
    const auto& level = chain.levels[static_cast<std::size_t>(i)];
    if (!std::is_sorted(level.begin(), level.end())) return false;
    if (static_cast<long>(level.size()) * power(L, i) < profile.m) return false;
    if (i > 0) {
      const auto& parent = chain.levels[static_cast<std::size_t>(i - 1)];
      if (!std::includes(parent.begin(), parent.end(), level.begin(), level.end())) return false;
    }
    for (int r : level) {
      const auto& row = profile.rows[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) < i) return false;
      if (!std::equal(chain.prefix.begin(), chain.prefix.begin() + i, row.begin())) return false;
    }
  }
  return true;
}

std::optional<bool> largex_counting_inequality(int m, int L, int level, int x_size) {
  if (L < 5) return std::nullopt;
  // Both sides scaled by L^(level+1).
  const BigCount scale = power(L, level + 1);
  BigCount lhs = BigCount(L - 5) * m + BigCount(x_size - L + 5) * level * scale;
  BigCount rhs = BigCount(m) * L;
  return lhs >= rhs;
}

int repeated_column_entries(const PreferenceProfile& profile, const LargeX& outcome) {
  const auto counts = column_counts(profile, outcome.chain.levels.back(), outcome.level);
  return static_cast<int>(
      std::count_if(counts.begin(), counts.end(), [&](const auto& e) { return e.second >= outcome.level + 1; }));
}

std::string variant_name(const EllemOutcome& outcome) {
  if (std::holds_alternative<CommonCore>(outcome)) return "CommonCore";
  if (std::holds_alternative<LargeX>(outcome)) return "LargeX";
  return "Vacuous";
}

}  // namespace hap
