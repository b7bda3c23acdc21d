#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hap/finite_set.hpp"

namespace hap {

/// A finite family of subsets of {1, ..., universe}.
struct SetFamily {
  int universe = 1;
  std::vector<FiniteSet> sets;
  std::optional<int> uniformity;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }

  /// Throws Input if a member leaves the universe or breaks the declared uniformity.
  void validate() const;

  /// Sorts members lexicographically and removes duplicates.
  void normalize();
  SetFamily normalized() const {
    auto copy = *this;
    copy.normalize();
    return copy;
  }

  FiniteSet union_all() const;
  bool has_duplicates() const;

  /// Builds an m-uniform family and validates it. The universe defaults to the
  /// largest element present.
  static SetFamily uniform(int m, std::vector<FiniteSet> sets, std::optional<int> universe = std::nullopt);
  /// Family without a declared uniformity.
  static SetFamily of(std::vector<FiniteSet> sets, std::optional<int> universe = std::nullopt);

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Common cardinality of every member, if the family is uniform and nonempty.
std::optional<int> common_size(const SetFamily& family);

/// All k-subsets of {1, ..., n}, in lexicographic order.
std::vector<FiniteSet> all_k_subsets(int n, int k);

}  // namespace hap
