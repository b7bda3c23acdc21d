#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hap/finite_set.hpp"
#include "hap/set_family.hpp"

namespace hap {

/// m buyers, each with an ordered list of distinct houses (most preferred first).
/// Buyers are 0-based internally; houses are the 1-based labels of the ground set.
struct PreferenceProfile {
  int m = 0;
  int universe = 1;
  std::vector<std::vector<int>> rows;

  /// Throws Input naming the offending row.
  void validate() const;

  /// Validated profile with m = rows.size().
  static PreferenceProfile make(int universe, std::vector<std::vector<int>> rows);

  /// Each row cut to its first `len` entries.
  PreferenceProfile truncated(int len) const;

  /// Position of `house` in buyer's row, or -1.
  int rank_of(int buyer, int house) const;

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;
  friend bool operator<(const PreferenceProfile& a, const PreferenceProfile& b) { return a.rows < b.rows; }
};

/// Injective buyer -> house map; assignment[b] is the house of buyer b.
struct Matching {
  std::vector<int> assignment;

  FiniteSet image() const { return FiniteSet::from(assignment); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

enum class Provenance { Permutations, OnePoms, PermutationSample };

struct ReachableFamily {
  SetFamily family;  ///< m-uniform, sorted, duplicate-free
  Provenance provenance = Provenance::Permutations;
  bool lower_bound = false;  ///< sampled, so possibly incomplete
};

struct Coalition {
  std::vector<int> buyers;  ///< ascending, nonempty
  Matching improved;
};

/// Serial dictatorship: buyers pick in `order` (a permutation of 0..m-1).
Matching greedy_matching(const PreferenceProfile& profile, std::span<const int> order);

/// No single buyer can move to a strictly preferred free house.
bool is_one_pom(const PreferenceProfile& profile, const Matching& tau);

/// Lexicographically least blocking coalition of size <= max_size, paired with
/// its lexicographically least improvement (by row positions, in buyer order).
std::optional<Coalition> find_blocking_coalition(const PreferenceProfile& profile, const Matching& tau,
                                                 int max_size);

inline constexpr int kMaxPermutationBuyers = 10;
inline constexpr int kMaxOnePomBuyers = 6;
inline constexpr int kMaxOnePomRow = 8;

/// { s(tau_pi) : all m! orders }. Memoized depth-first search over partial
/// orders, parallel over the first two picks.
ReachableFamily reachable_family_by_permutations(const PreferenceProfile& profile);

/// Lower bound from `samples` random orders.
ReachableFamily sample_reachable_family(const PreferenceProfile& profile, std::uint64_t samples,
                                        std::uint64_t seed);

/// { s(tau) : tau a 1-POM }, by backtracking over injective row-respecting assignments.
ReachableFamily reachable_family_by_one_poms(const PreferenceProfile& profile);

namespace reference {
/// Plain m! loop over std::next_permutation; kept as the oracle for the kernel above.
ReachableFamily reachable_family_by_permutations(const PreferenceProfile& profile);
}  // namespace reference

/// Houses relabeled 1, 2, ... in order of first appearance, row-major.
PreferenceProfile relabel_by_first_appearance(const PreferenceProfile& profile);

/// Least relabeled profile over all buyer orders. Invariant under house and
/// buyer renaming; m! work, so intended for small m.
PreferenceProfile canonical_form(const PreferenceProfile& profile);

/// Every canonical profile with m buyers and rows of length m, in lexicographic order.
std::vector<PreferenceProfile> canonical_profiles(int m);

/// Adds a buyer whose top choice is a fresh house; every row grows by one fresh
/// trailing house. The reachable family keeps its size.
PreferenceProfile extend_with_fresh_buyer(const PreferenceProfile& profile);

PreferenceProfile random_profile(int m, int universe, int row_length, std::mt19937_64& rng);

struct FOracleConfig {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  int restarts = 32;
  int iterations = 200;
  int universe = 0;  ///< heuristic universe; 0 means 2m
};

struct FOracleResult {
  int value = 0;
  PreferenceProfile witness;
  bool exact = false;
  std::uint64_t seed = 0;
  std::uint64_t profiles_examined = 0;
};

inline constexpr int kMaxExhaustiveF = 3;

/// Largest reachable family over all profiles of m buyers.
FOracleResult f_oracle(int m, const FOracleConfig& config);

std::string to_string(Provenance p);

}  // namespace hap
