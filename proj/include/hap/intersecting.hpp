#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hap/set_family.hpp"
#include "hap/setcore.hpp"
#include "hap/setpairs.hpp"

namespace hap {

/// |{F ∈ C([n], k) : |F ∩ [t + 2r]| >= t + r}|
BigCount frankl_family_size(int n, int k, int t, int r);

/// Maximum size of a k-uniform t-intersecting family on [n], as the best
/// candidate family over r. With `crosscheck` and C(n, k) <= 70 the value is
/// compared against a maximum-clique search; a disagreement throws Internal.
BigCount ak(int n, int k, int t, bool crosscheck = false);

inline constexpr int kMaxCliqueCrosscheck = 70;

/// Maximum t-intersecting k-uniform family on [n] by clique search.
BigCount ak_by_clique(int n, int k, int t);

struct FiScan {
  int m = 0;
  int t = 0;                   ///< ceil(m / 2)
  std::vector<BigCount> sizes;  ///< sizes[i] = |F_i|
  int argmax = 0;              ///< least maximizing i
};

/// F_i = {F ∈ C([2m], m) : |F ∩ [ceil(m/2) + 2i]| >= ceil(m/2) + i} for
/// i = 0 .. min(floor(m/2), floor((2m - ceil(m/2)) / 2)).
FiScan fi_family_scan(int m);

struct SearchBudget {
  bool exhaustive = true;
  std::uint64_t node_limit = 100'000'000;
};

struct ConjectureSearchResult {
  enum class Which { Tuz, Ak };
  Which which = Which::Tuz;
  int a = 1;
  int b = 1;
  int t = 1;
  int universe = 1;
  int max_found = 0;
  SetPairSystem witness;
  bool exact = false;
  BigCount conjectured_bound;
  BigCount known_bound;  ///< floor(C(a+b, a) / 2)
  bool counterexample = false;
  bool known_bound_respected = true;
  std::uint64_t nodes = 0;
};

/// Largest system of distinct pairs with |A_i| = a, |B_i| = b on [u], the
/// Bollobás condition, and pairwise intersecting A's.
ConjectureSearchResult conjecture_tuz_search(int a, int b, int u, const SearchBudget& budget = {});

/// As above with |A_i ∩ A_j| >= t; the conjectured bound is ak(a + b, a, t).
ConjectureSearchResult conjecture_ak_search(int a, int b, int t, int u, const SearchBudget& budget = {});

struct JOracleResult {
  int m = 1;
  int universe = 1;
  int value = 0;
  SetFamily witness;
  bool exact = false;
  BigCount bound;  ///< C(2m - 1, m)
  std::uint64_t nodes = 0;
};

/// Largest m-uniform ceil(m/2)-intersecting family on [u] without m + 1
/// disjointly representable members.
JOracleResult j_oracle(int m, int u, const SearchBudget& budget = {});

namespace reference {
/// Counts the same family by listing every k-subset; n <= 16.
BigCount frankl_family_size_enumerated(int n, int k, int t, int r);
}  // namespace reference

}  // namespace hap
