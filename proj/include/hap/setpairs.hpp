#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hap/finite_set.hpp"
#include "hap/set_family.hpp"
#include "hap/setcore.hpp"

namespace hap {

/// Which cross-intersection condition a list of (A_i, B_i) pairs claims.
struct PairKind {
  enum class Tag { Bollobas, Skew, IntersectingBollobas, TIntersectingBollobas };
  Tag tag = Tag::Bollobas;
  int t = 1;  ///< only for TIntersectingBollobas

  static PairKind bollobas() { return {Tag::Bollobas, 1}; }
  static PairKind skew() { return {Tag::Skew, 1}; }
  static PairKind intersecting() { return {Tag::IntersectingBollobas, 1}; }
  static PairKind t_intersecting(int t) { return {Tag::TIntersectingBollobas, t}; }

  friend bool operator==(const PairKind&, const PairKind&) = default;
};

struct SetPair {
  FiniteSet a;
  FiniteSet b;
  friend bool operator==(const SetPair&, const SetPair&) = default;
};

struct SetPairSystem {
  std::vector<SetPair> pairs;
  PairKind kind;
  friend bool operator==(const SetPairSystem&, const SetPairSystem&) = default;
};

/// First (i, j), 0-based, at which the system breaks the condition of `kind`.
std::optional<std::pair<int, int>> find_kind_violation(const SetPairSystem& system, const PairKind& kind);
inline bool satisfies(const SetPairSystem& system, const PairKind& kind) {
  return !find_kind_violation(system, kind);
}

/// Least private element of each set, if every set has one.
std::optional<std::vector<int>> is_disjointly_representable(const std::vector<FiniteSet>& sets);

/// For each member F_i, an inclusion-minimal E_i inside (∪F) \ F_i meeting every
/// other member. Greedy insertion over the other members ordered by |F_j \ F_i|
/// (ties by index), taking the least element of F_j \ F_i, then a deletion pass
/// in reverse insertion order. Returned as a Bollobás system (F_i, E_i).
SetPairSystem minimal_transversals(const SetFamily& family);

/// sum 1 / C(|A_j| + |B_j|, |B_j|), exactly. Throws KindViolation unless the
/// system satisfies the Bollobás condition.
Rational bollobas_sum(const SetPairSystem& system);

bool check_skew_cross_intersecting(const SetPairSystem& system);

/// t pairs (F_i, E_i) -> 2t pairs: (F_i, E_i) for i <= t, then the swapped pairs
/// in reverse order. Requires the Bollobás condition and pairwise intersecting F's.
SetPairSystem skew_double(const SetPairSystem& system);

struct DrFreeResult {
  int r = 1;
  int k = 1;
  int universe = 1;
  int value = 0;
  SetFamily witness;
  bool exact = false;
  BigCount bound;  ///< C(r + k - 1, k - 1)
  std::uint64_t nodes = 0;
};

/// Largest r-uniform family on {1..universe} with no k disjointly representable members.
DrFreeResult max_dr_free_family_oracle(int r, int k, int universe, bool exhaustive,
                                       std::uint64_t node_limit = 50'000'000);

/// { F \ Y : Y ⊆ F ∈ family }
SetFamily restrict_family(const SetFamily& family, const FiniteSet& y);

struct PigeonholeReport {
  FiniteSet best_y;
  std::size_t restricted_size = 0;
  BigCount choices;  ///< C(|X|, slack)
  bool premise = false;  ///< every member keeps >= |X| - slack elements of X
  bool holds = false;    ///< |family| <= restricted_size * choices
};

/// Over all Y ⊆ X with |Y| = |X| - slack, the largest restriction, and the
/// counting bound |family| <= |family_Y| * C(|X|, slack).
PigeonholeReport pigeonhole_restriction(const SetFamily& family, const FiniteSet& x, int slack);

std::string to_string(const PairKind& kind);
PairKind pair_kind_from_string(const std::string& s);

}  // namespace hap
