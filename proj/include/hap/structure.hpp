#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hap/finite_set.hpp"
#include "hap/housing.hpp"

namespace hap {

/// Nested row sets A_0 ⊇ A_1 ⊇ ... ⊇ A_d with the common column prefix of each level.
/// levels[0] is every row; rows in levels[i] agree on their first i entries,
/// which are prefix[0..i).
struct RowChain {
  std::vector<std::vector<int>> levels;  ///< 0-based buyer indices, ascending
  std::vector<int> prefix;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  friend bool operator==(const RowChain&, const RowChain&) = default;
};

struct CommonCore {
  FiniteSet core;
  RowChain chain;
  friend bool operator==(const CommonCore&, const CommonCore&) = default;
};

struct LargeX {
  FiniteSet x_set;
  int level = 0;
  RowChain chain;
  friend bool operator==(const LargeX&, const LargeX&) = default;
};

struct Vacuous {
  std::string reason;
  friend bool operator==(const Vacuous&, const Vacuous&) = default;
};

using EllemOutcome = std::variant<CommonCore, LargeX, Vacuous>;

struct EllemParams {
  int L = 1;
  int depth = 0;
};

/// L = ell(m), depth = max(ell(m) - 4, 0).
EllemParams default_ellem_params(int m);

/// Round procedure on the preference matrix. Round i looks for the least house
/// occurring in column i + 1 on at least max(m / L^(i+1), i + 1) rows of A_i.
EllemOutcome ellem_analyze(const PreferenceProfile& profile, const EllemParams& params);

/// Checks the outcome's guarantee against every reachable set of the profile.
bool verify_ellem_outcome(const PreferenceProfile& profile, const EllemOutcome& outcome);

/// Nesting, |A_i| * L^i >= m, and prefix constancy.
bool chain_invariants_hold(const PreferenceProfile& profile, const RowChain& chain, int L);

/// The counting inequality (L-5) m / L^(i+1) + (|X| - L + 5) i >= m / L^i for a
/// LargeX outcome, in exact arithmetic. Empty when L < 5.
std::optional<bool> largex_counting_inequality(int m, int L, int level, int x_size);

/// Houses of column `level + 1` on rows of A_level that occur at least level + 1 times.
int repeated_column_entries(const PreferenceProfile& profile, const LargeX& outcome);

std::string variant_name(const EllemOutcome& outcome);

}  // namespace hap
