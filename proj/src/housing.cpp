#include "hap/housing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hap/error.hpp"
#include "hap/parallel.hpp"

namespace hap {

void PreferenceProfile::validate() const {
  require(m >= 1, ErrorKind::Input, "profile needs at least one buyer");
  require(static_cast<int>(rows.size()) == m, ErrorKind::Input,
          "profile declares m = " + std::to_string(m) + " but has " + std::to_string(rows.size()) + " rows");
  require(universe >= 1 && universe <= kMaxUniverse, ErrorKind::Input,
          "universe " + std::to_string(universe) + " outside [1, 1024]");
  for (int b = 0; b < m; ++b) {
    const auto& row = rows[b];
    const std::string name = "row " + std::to_string(b + 1);
    require(static_cast<int>(row.size()) >= m, ErrorKind::Input,
            name + " has " + std::to_string(row.size()) + " entries, needs at least m = " + std::to_string(m));
    FiniteSet seen;
    for (int h : row) {
      require(h >= 1 && h <= universe, ErrorKind::Input,
              name + ": house " + std::to_string(h) + " outside [1, " + std::to_string(universe) + "]");
      require(!seen.contains(h), ErrorKind::Input, name + ": duplicate house " + std::to_string(h));
      seen.insert(h);
    }
  }
}

PreferenceProfile PreferenceProfile::make(int universe, std::vector<std::vector<int>> rows) {
  PreferenceProfile p;
  p.m = static_cast<int>(rows.size());
  p.universe = universe;
  p.rows = std::move(rows);
  p.validate();
  return p;
}

PreferenceProfile PreferenceProfile::truncated(int len) const {
  PreferenceProfile p = *this;
  for (auto& row : p.rows)
    if (static_cast<int>(row.size()) > len) row.resize(static_cast<std::size_t>(len));
  return p;
}

int PreferenceProfile::rank_of(int buyer, int house) const {
  const auto& row = rows[static_cast<std::size_t>(buyer)];
  auto it = std::find(row.begin(), row.end(), house);
  return it == row.end() ? -1 : static_cast<int>(it - row.begin());
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Permutations: return "permutations";
    case Provenance::OnePoms: return "one_poms";
    case Provenance::PermutationSample: return "permutation_sample";
  }
  return "unknown";
}

Matching greedy_matching(const PreferenceProfile& profile, std::span<const int> order) {
  require(static_cast<int>(order.size()) == profile.m, ErrorKind::Input, "order must list every buyer once");
  std::vector<char> seen(static_cast<std::size_t>(profile.m), 0);
  for (int b : order) {
    require(b >= 0 && b < profile.m && !seen[static_cast<std::size_t>(b)], ErrorKind::Input,
            "order is not a permutation of the buyers");
    seen[static_cast<std::size_t>(b)] = 1;
  }
  Matching tau;
  tau.assignment.assign(static_cast<std::size_t>(profile.m), 0);
  FiniteSet taken;
  for (int b : order) {
    int pick = 0;
    for (int h : profile.rows[static_cast<std::size_t>(b)]) {
      if (!taken.contains(h)) {
        pick = h;
        break;
      }
    }
    // Rows have >= m entries and at most m - 1 are taken.
    require(pick != 0, ErrorKind::Internal, "buyer " + std::to_string(b + 1) + " exhausted their row");
    taken.insert(pick);
    tau.assignment[static_cast<std::size_t>(b)] = pick;
  }
  return tau;
}

static void require_valid_matching(const PreferenceProfile& profile, const Matching& tau) {
  require(static_cast<int>(tau.assignment.size()) == profile.m, ErrorKind::Input, "matching must cover every buyer");
  require(tau.image().size() == profile.m, ErrorKind::Input, "matching is not injective");
  for (int b = 0; b < profile.m; ++b)
    require(profile.rank_of(b, tau.assignment[static_cast<std::size_t>(b)]) >= 0, ErrorKind::Input,
            "buyer " + std::to_string(b + 1) + " is matched to a house outside their row");
}

bool is_one_pom(const PreferenceProfile& profile, const Matching& tau) {
  require_valid_matching(profile, tau);
  const FiniteSet image = tau.image();
  for (int b = 0; b < profile.m; ++b) {
    const auto& row = profile.rows[static_cast<std::size_t>(b)];
    for (int h : row) {
      if (h == tau.assignment[static_cast<std::size_t>(b)]) break;
      if (!image.contains(h)) return false;
    }
  }
  return true;
}

namespace {

// Assigns coalition members, in order, strictly better houses that are free of
// outsiders and not reused inside the coalition.
bool improve(const PreferenceProfile& profile, const Matching& tau, const std::vector<int>& coalition,
             std::size_t at, const FiniteSet& blocked, FiniteSet& used, Matching& out) {
  if (at == coalition.size()) return true;
  int b = coalition[at];
  const auto& row = profile.rows[static_cast<std::size_t>(b)];
  int current = profile.rank_of(b, tau.assignment[static_cast<std::size_t>(b)]);
  for (int p = 0; p < current; ++p) {
    int h = row[static_cast<std::size_t>(p)];
    if (blocked.contains(h) || used.contains(h)) continue;
    used.insert(h);
    out.assignment[static_cast<std::size_t>(b)] = h;
    if (improve(profile, tau, coalition, at + 1, blocked, used, out)) return true;
    used.erase(h);
  }
  return false;
}

bool coalition_search(const PreferenceProfile& profile, const Matching& tau, int max_size, std::vector<int>& coalition,
                      std::optional<Coalition>& found) {
  int start = coalition.empty() ? 0 : coalition.back() + 1;
  for (int b = start; b < profile.m; ++b) {
    coalition.push_back(b);
    FiniteSet blocked;
    for (int o = 0; o < profile.m; ++o)
      if (std::find(coalition.begin(), coalition.end(), o) == coalition.end())
        blocked.insert(tau.assignment[static_cast<std::size_t>(o)]);
    FiniteSet used;
    Matching candidate = tau;
    if (improve(profile, tau, coalition, 0, blocked, used, candidate)) {
      found = Coalition{coalition, candidate};
      return true;
    }
    if (static_cast<int>(coalition.size()) < max_size && coalition_search(profile, tau, max_size, coalition, found))
      return true;
    coalition.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Coalition> find_blocking_coalition(const PreferenceProfile& profile, const Matching& tau,
                                                 int max_size) {
  require_valid_matching(profile, tau);
  require(max_size >= 1 && max_size <= profile.m, ErrorKind::Input, "max_size must lie in [1, m]");
  std::vector<int> coalition;
  std::optional<Coalition> found;
  coalition_search(profile, tau, max_size, coalition, found);
  return found;
}

namespace {

ReachableFamily finish(std::vector<FiniteSet> sets, int m, int universe, Provenance provenance, bool lower) {
  ReachableFamily r;
  r.family.universe = universe;
  r.family.uniformity = m;
  r.family.sets = std::move(sets);
  r.family.normalize();
  r.provenance = provenance;
  r.lower_bound = lower;
  return r;
}

// Houses of the first m columns, relabeled densely; at most m^2 <= 100 labels
// for the exhaustive range, so two words hold any taken set.
struct CompactProfile {
  int m = 0;
  std::vector<std::vector<int>> rows;  // compact labels 0..labels-1
  std::vector<int> house_of;           // compact label -> original house
};

CompactProfile compact(const PreferenceProfile& profile) {
  CompactProfile c;
  c.m = profile.m;
  std::unordered_map<int, int> label;
  for (const auto& row : profile.rows) {
    std::vector<int> crow;
    for (int p = 0; p < profile.m; ++p) {
      int h = row[static_cast<std::size_t>(p)];
      auto [it, fresh] = label.try_emplace(h, static_cast<int>(c.house_of.size()));
      if (fresh) c.house_of.push_back(h);
      crow.push_back(it->second);
    }
    c.rows.push_back(std::move(crow));
  }
  return c;
}

using Taken = std::array<std::uint64_t, 2>;

struct StateKey {
  std::uint32_t remaining;
  Taken taken;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.remaining * 0x9E3779B97F4A7C15ULL;
    h ^= k.taken[0] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= k.taken[1] + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct TakenHash {
  std::size_t operator()(const Taken& t) const { return StateKeyHash{}(StateKey{0, t}); }
};

inline bool has(const Taken& t, int label) { return (t[label >> 6] >> (label & 63)) & 1U; }
inline void put(Taken& t, int label) { t[label >> 6] |= std::uint64_t{1} << (label & 63); }

inline int first_free(const CompactProfile& c, int buyer, const Taken& t) {
  for (int label : c.rows[static_cast<std::size_t>(buyer)])
    if (!has(t, label)) return label;
  return -1;
}

class PermutationWalker {
 public:
  explicit PermutationWalker(const CompactProfile& c) : c_(c) {}

  void walk(std::uint32_t remaining, Taken taken) {
    if (remaining == 0) {
      results_.insert(taken);
      return;
    }
    if (!visited_.insert(StateKey{remaining, taken}).second) return;
    for (std::uint32_t rest = remaining; rest; rest &= rest - 1) {
      int b = std::countr_zero(rest);
      Taken next = taken;
      put(next, first_free(c_, b, taken));
      walk(remaining & ~(std::uint32_t{1} << b), next);
    }
  }

  const std::unordered_set<Taken, TakenHash>& results() const { return results_; }

 private:
  const CompactProfile& c_;
  std::unordered_set<StateKey, StateKeyHash> visited_;
  std::unordered_set<Taken, TakenHash> results_;
};

FiniteSet expand(const CompactProfile& c, const Taken& t) {
  FiniteSet s;
  for (int label = 0; label < static_cast<int>(c.house_of.size()); ++label)
    if (has(t, label)) s.insert(c.house_of[static_cast<std::size_t>(label)]);
  return s;
}

}  // namespace

ReachableFamily reachable_family_by_permutations(const PreferenceProfile& profile) {
  profile.validate();
  require(profile.m <= kMaxPermutationBuyers, ErrorKind::BudgetExceeded,
          "exhaustive permutation enumeration is limited to m <= " + std::to_string(kMaxPermutationBuyers));
  const CompactProfile c = compact(profile);
  const int m = profile.m;
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;

  std::vector<std::pair<int, int>> roots;
  for (int a = 0; a < m; ++a) {
    if (m == 1) roots.emplace_back(a, -1);
    for (int b = 0; b < m && m > 1; ++b)
      if (a != b) roots.emplace_back(a, b);
  }

  std::vector<std::vector<Taken>> partial(roots.size());
#pragma omp parallel for schedule(dynamic) if (!parallel::in_parallel())
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto [a, b] = roots[r];
    Taken t{};
    put(t, first_free(c, a, t));
    std::uint32_t remaining = all & ~(std::uint32_t{1} << a);
    if (b >= 0) {
      put(t, first_free(c, b, t));
      remaining &= ~(std::uint32_t{1} << b);
    }
    PermutationWalker walker(c);
    walker.walk(remaining, t);
    partial[r].assign(walker.results().begin(), walker.results().end());
  }

  std::unordered_set<Taken, TakenHash> merged;
  for (const auto& p : partial) merged.insert(p.begin(), p.end());
  std::vector<FiniteSet> sets;
  sets.reserve(merged.size());
  for (const auto& t : merged) sets.push_back(expand(c, t));
  return finish(std::move(sets), m, profile.universe, Provenance::Permutations, false);
}

ReachableFamily reference::reachable_family_by_permutations(const PreferenceProfile& profile) {
  profile.validate();
  require(profile.m <= kMaxPermutationBuyers, ErrorKind::BudgetExceeded,
          "exhaustive permutation enumeration is limited to m <= " + std::to_string(kMaxPermutationBuyers));
  std::vector<int> order(static_cast<std::size_t>(profile.m));
  std::iota(order.begin(), order.end(), 0);
  std::set<FiniteSet> seen;
  do {
    seen.insert(greedy_matching(profile, order).image());
  } while (std::next_permutation(order.begin(), order.end()));
  return finish({seen.begin(), seen.end()}, profile.m, profile.universe, Provenance::Permutations, false);
}

ReachableFamily sample_reachable_family(const PreferenceProfile& profile, std::uint64_t samples,
                                        std::uint64_t seed) {
  profile.validate();
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(profile.m));
  std::iota(order.begin(), order.end(), 0);
  std::unordered_set<FiniteSet, FiniteSetHash> seen;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    seen.insert(greedy_matching(profile, order).image());
  }
  return finish({seen.begin(), seen.end()}, profile.m, profile.universe, Provenance::PermutationSample, true);
}

namespace {

class OnePomWalker {
 public:
  explicit OnePomWalker(const PreferenceProfile& p) : p_(p) {
    std::unordered_map<int, int> label;
    for (const auto& row : p.rows) {
      std::vector<int> crow;
      for (int h : row) {
        auto [it, fresh] = label.try_emplace(h, static_cast<int>(house_of_.size()));
        if (fresh) house_of_.push_back(h);
        crow.push_back(it->second);
      }
      rows_.push_back(std::move(crow));
    }
  }

  void walk(int buyer, std::uint64_t used, std::uint64_t required) {
    if (buyer == p_.m) {
      if ((required & ~used) == 0) results_.insert(used);
      return;
    }
    const auto& row = rows_[static_cast<std::size_t>(buyer)];
    std::uint64_t before = 0;
    for (int label : row) {
      std::uint64_t bit = std::uint64_t{1} << label;
      if (!(used & bit)) {
        std::uint64_t need = required | before;
        std::uint64_t next = used | bit;
        // Each still-missing required house needs one of the remaining buyers.
        if (std::popcount(need & ~next) <= p_.m - buyer - 1) walk(buyer + 1, next, need);
      }
      before |= bit;
    }
  }

  std::vector<FiniteSet> sets() const {
    std::vector<FiniteSet> out;
    for (auto mask : results_) {
      FiniteSet s;
      for (auto w = mask; w; w &= w - 1) s.insert(house_of_[static_cast<std::size_t>(std::countr_zero(w))]);
      out.push_back(s);
    }
    return out;
  }

 private:
  const PreferenceProfile& p_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> house_of_;
  std::unordered_set<std::uint64_t> results_;
};

}  // namespace

ReachableFamily reachable_family_by_one_poms(const PreferenceProfile& profile) {
  profile.validate();
  require(profile.m <= kMaxOnePomBuyers, ErrorKind::BudgetExceeded,
          "1-POM enumeration is limited to m <= " + std::to_string(kMaxOnePomBuyers));
  for (const auto& row : profile.rows)
    require(static_cast<int>(row.size()) <= kMaxOnePomRow, ErrorKind::BudgetExceeded,
            "1-POM enumeration is limited to rows of length <= " + std::to_string(kMaxOnePomRow));
  OnePomWalker walker(profile);
  walker.walk(0, 0, 0);
  return finish(walker.sets(), profile.m, profile.universe, Provenance::OnePoms, false);
}

PreferenceProfile relabel_by_first_appearance(const PreferenceProfile& profile) {
  PreferenceProfile out = profile;
  std::unordered_map<int, int> label;
  for (auto& row : out.rows)
    for (int& h : row) {
      auto [it, fresh] = label.try_emplace(h, static_cast<int>(label.size()) + 1);
      h = it->second;
    }
  out.universe = std::max(1, static_cast<int>(label.size()));
  return out;
}

PreferenceProfile canonical_form(const PreferenceProfile& profile) {
  std::vector<int> order(static_cast<std::size_t>(profile.m));
  std::iota(order.begin(), order.end(), 0);
  std::optional<PreferenceProfile> best;
  do {
    PreferenceProfile permuted = profile;
    for (int i = 0; i < profile.m; ++i)
      permuted.rows[static_cast<std::size_t>(i)] = profile.rows[static_cast<std::size_t>(order[i])];
    auto relabeled = relabel_by_first_appearance(permuted);
    if (!best || relabeled < *best) best = std::move(relabeled);
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

namespace {

void grow_profiles(int m, int cell, int labels, std::vector<std::vector<int>>& rows,
                   std::vector<PreferenceProfile>& out) {
  if (cell == m * m) {
    PreferenceProfile p;
    p.m = m;
    p.universe = labels;
    p.rows = rows;
    if (canonical_form(p) == p) out.push_back(std::move(p));
    return;
  }
  auto& row = rows[static_cast<std::size_t>(cell / m)];
  int col = cell % m;
  for (int h = 1; h <= labels + 1; ++h) {
    if (std::find(row.begin(), row.begin() + col, h) != row.begin() + col) continue;
    row[static_cast<std::size_t>(col)] = h;
    grow_profiles(m, cell + 1, std::max(labels, h), rows, out);
  }
}

}  // namespace

std::vector<PreferenceProfile> canonical_profiles(int m) {
  require(m >= 1 && m <= kMaxExhaustiveF, ErrorKind::BudgetExceeded,
          "canonical profile enumeration is limited to m <= " + std::to_string(kMaxExhaustiveF));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<PreferenceProfile> out;
  grow_profiles(m, 0, 0, rows, out);
  return out;
}

PreferenceProfile extend_with_fresh_buyer(const PreferenceProfile& profile) {
  PreferenceProfile out = profile;
  int next = profile.universe;
  for (const auto& row : profile.rows)
    for (int h : row) next = std::max(next, h);
  const int fresh_top = ++next;
  for (auto& row : out.rows) row.push_back(++next);
  std::vector<int> row{fresh_top};
  while (static_cast<int>(row.size()) < profile.m + 1) row.push_back(++next);
  out.rows.push_back(std::move(row));
  out.m = profile.m + 1;
  out.universe = next;
  out.validate();
  return out;
}

PreferenceProfile random_profile(int m, int universe, int row_length, std::mt19937_64& rng) {
  require(row_length >= m && row_length <= universe, ErrorKind::Input, "need m <= row_length <= universe");
  std::vector<int> houses(static_cast<std::size_t>(universe));
  std::iota(houses.begin(), houses.end(), 1);
  PreferenceProfile p;
  p.m = m;
  p.universe = universe;
  for (int b = 0; b < m; ++b) {
    // Partial Fisher-Yates; std::shuffle's draw sequence is library-specific.
    for (int i = 0; i < row_length; ++i) {
      std::uniform_int_distribution<int> pick(i, universe - 1);
      std::swap(houses[static_cast<std::size_t>(i)], houses[static_cast<std::size_t>(pick(rng))]);
    }
    p.rows.emplace_back(houses.begin(), houses.begin() + row_length);
  }
  return p;
}

namespace {

int family_size(const PreferenceProfile& p) {
  return static_cast<int>(reachable_family_by_permutations(p).family.size());
}

struct Candidate {
  int value = 0;
  PreferenceProfile witness;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.witness < b.witness;
}

Candidate hill_climb(int m, int universe, int iterations, std::uint64_t seed, int restart) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(restart), std::uint64_t{0x68617066}};
  std::mt19937_64 rng(seq);
  Candidate cur{0, random_profile(m, universe, m, rng)};
  cur.value = family_size(cur.witness);
  std::uniform_int_distribution<int> pick_buyer(0, m - 1), pick_col(0, m - 1), pick_house(1, universe);
  for (int it = 0; it < iterations; ++it) {
    PreferenceProfile next = cur.witness;
    auto& row = next.rows[static_cast<std::size_t>(pick_buyer(rng))];
    int col = pick_col(rng);
    int h = pick_house(rng);
    auto clash = std::find(row.begin(), row.end(), h);
    if (clash != row.end())
      std::swap(*clash, row[static_cast<std::size_t>(col)]);
    else
      row[static_cast<std::size_t>(col)] = h;
    int v = family_size(next);
    if (v >= cur.value) cur = Candidate{v, std::move(next)};
  }
  return cur;
}

}  // namespace

FOracleResult f_oracle(int m, const FOracleConfig& config) {
  require(m >= 1, ErrorKind::Input, "f oracle requires m >= 1");
  FOracleResult result;
  result.seed = config.seed;
  if (config.exhaustive) {
    require(m <= kMaxExhaustiveF, ErrorKind::BudgetExceeded,
            "exhaustive f oracle is limited to m <= " + std::to_string(kMaxExhaustiveF));
    auto profiles = canonical_profiles(m);
    std::vector<int> values(profiles.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < profiles.size(); ++i) values[i] = family_size(profiles[i]);
    // profiles come in lexicographic order, so the first maximum is the least witness
    std::size_t best = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
    result.value = values[best];
    result.witness = profiles[best];
    result.exact = true;
    result.profiles_examined = profiles.size();
    return result;
  }
  require(m <= kMaxPermutationBuyers, ErrorKind::BudgetExceeded,
          "heuristic f oracle is limited to m <= " + std::to_string(kMaxPermutationBuyers));
  const int universe = config.universe > 0 ? config.universe : 2 * m;
  require(universe >= m, ErrorKind::Input, "heuristic universe must be at least m");
  std::vector<Candidate> found(static_cast<std::size_t>(std::max(config.restarts, 1)));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < static_cast<int>(found.size()); ++r)
    found[static_cast<std::size_t>(r)] = hill_climb(m, universe, config.iterations, config.seed, r);
  for (auto& c : found) c.witness = m <= 7 ? canonical_form(c.witness) : relabel_by_first_appearance(c.witness);
  auto best = std::min_element(found.begin(), found.end(), better);
  result.value = best->value;
  result.witness = best->witness;
  result.exact = false;
  result.profiles_examined = found.size() * static_cast<std::uint64_t>(config.iterations + 1);
  return result;
}

}  // namespace hap
