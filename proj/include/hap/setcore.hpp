#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hap {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k > n.
BigCount binom(std::uint64_t n, std::uint64_t k);

/// Largest l >= 1 with l^l <= m.
int ell(std::uint64_t m);

/// C(2m - l + 4, m): the reachable-set bound for large m, with l supplied.
BigCount reachable_bound_with_ell(int m, int l);

/// ceil(m (ln m + 1)), the union-size ceiling of property-Q families.
std::uint64_t union_ceiling(int m);

struct BoundsReport {
  int m = 1;
  int ell = 1;
  BigCount thm_i;       ///< C(2m - ell + 4, m); only claimed for sufficiently large m
  BigCount thm_ii;      ///< C(2m - 1, m)
  BigCount prop_lower;  ///< C(floor(3m/2), m)
  BigCount akm_upper;   ///< C(ceil(m (ln m + 1)), m)
  bool thm_i_asymptotic = true;
};

BoundsReport bounds_report(int m);

std::string to_decimal(const BigCount& v);
std::string to_decimal(const Rational& v);

}  // namespace hap
