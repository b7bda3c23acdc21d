#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hap/finite_set.hpp"
#include "hap/set_family.hpp"

namespace hap {

enum class CheckMode { Exact, Refute };

enum class Property { P, Q };

/// Outcome of a property check. Indices refer to the normalized (sorted,
/// duplicate-free) family. A refute-mode "holds" only means no violation was found.
struct PropertyVerdict {
  Property property = Property::P;
  bool holds = true;
  CheckMode mode = CheckMode::Exact;
  std::optional<int> k;
  std::vector<int> witness_indices;
  std::vector<FiniteSet> witness_sets;
  std::uint64_t tuples_checked = 0;
};

struct CheckConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100'000;            ///< random tuples in refute mode
  int small_tuples = 4;                       ///< refute mode also scans every tuple up to this size
  std::uint64_t node_budget = 4'000'000'000;  ///< exact mode gives up with ModeInfeasible past this
};

/// Tuples of distinct members only; k runs over 1..|family|. Violations for
/// k > m are (m+1)-subfamilies that are disjointly representable, so the
/// exact search stops at k = m + 1.
PropertyVerdict has_property_p(const SetFamily& family, int m, CheckMode mode, const CheckConfig& config = {});

/// |union of any k distinct members| <= sum_{i=1..k} floor(m / i).
PropertyVerdict has_property_q(const SetFamily& family, int m, CheckMode mode, const CheckConfig& config = {});

/// Whether the k-tuple violates P (resp. Q) for m.
bool violates_p(std::span<const FiniteSet> tuple, int m);
bool violates_q(std::span<const FiniteSet> tuple, int m);

/// sum_{i=1..k} floor(m / i)
int q_union_limit(int m, int k);

/// |union| <= m (ln m + 1) + 1e-9.
bool union_bound_check(const SetFamily& family, int m);

inline constexpr int kMaxHConstruction = 12;

/// All m-subsets of {1, ..., floor(3m/2)}.
SetFamily h_construction(int m);

struct OracleBudget {
  bool exhaustive = true;
  std::uint64_t node_limit = 50'000'000;
};

struct FamilyOracleResult {
  int value = 0;
  SetFamily witness;
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Largest m-uniform family on {1..universe} with property P.
FamilyOracleResult g_oracle(int m, int universe, const OracleBudget& budget = {});
/// Largest m-uniform family on {1..universe} with property Q.
FamilyOracleResult h_oracle(int m, int universe, const OracleBudget& budget = {});

namespace reference {
/// Definition-level check over all 2^n subsets; n <= 20.
PropertyVerdict has_property_bruteforce(const SetFamily& family, int m, Property property);
}  // namespace reference

std::string to_string(Property p);
std::string to_string(CheckMode m);

}  // namespace hap
