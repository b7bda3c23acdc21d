#include <doctest.h>

#include <cmath>

#include "hap/error.hpp"
#include "hap/set_family.hpp"
#include "hap/setcore.hpp"

using namespace hap;

TEST_SUITE("setcore") {
  TEST_CASE("binomial coefficients") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(7, 7) == 1);
    CHECK(to_decimal(binom(100, 50)) == "100891344545564193334812497256");
    CHECK(to_decimal(binom(64, 32)) == "1832624140942590534");
  }

  TEST_CASE("Pascal identity and symmetry") {
    for (std::uint64_t n = 1; n <= 80; ++n)
      for (std::uint64_t k = 1; k <= n; ++k) {
        CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
        CHECK(binom(n, k) == binom(n, n - k));
      }
  }

  TEST_CASE("ell") {
    CHECK(ell(1) == 1);
    CHECK(ell(3) == 1);
    CHECK(ell(4) == 2);
    CHECK(ell(26) == 2);
    CHECK(ell(27) == 3);
    CHECK(ell(255) == 3);
    CHECK(ell(256) == 4);
    CHECK(ell(3125) == 5);
    CHECK_THROWS_AS(ell(0), Error);
    for (std::uint64_t m = 1; m <= 50000; m += 7) {
      const int l = ell(m);
      BigCount lo = 1, hi = 1;
      for (int i = 0; i < l; ++i) lo *= l;
      for (int i = 0; i <= l; ++i) hi *= l + 1;
      CHECK(lo <= m);
      CHECK(hi > m);
    }
  }

  TEST_CASE("bounds report") {
    auto r = bounds_report(4);
    CHECK(r.ell == 2);
    CHECK(r.thm_ii == 35);
    CHECK(r.prop_lower == 15);
    CHECK(r.thm_i == 210);
    CHECK(r.akm_upper == 210);  // ceil(4 (ln 4 + 1)) = 10
    CHECK(r.thm_i_asymptotic);
    auto one = bounds_report(1);
    CHECK(one.thm_ii == 1);
    CHECK(one.prop_lower == 1);
    CHECK(one.akm_upper == 1);
    CHECK_THROWS_AS(bounds_report(0), Error);
  }

  TEST_CASE("bound relations") {
    for (int m = 1; m <= 300; ++m) {
      auto r = bounds_report(m);
      CHECK(r.prop_lower <= r.thm_ii);
      CHECK(r.prop_lower <= r.akm_upper);
      CHECK(reachable_bound_with_ell(m, 5) == binom(2 * m - 1, m));
      const double exact = m * (std::log(static_cast<double>(m)) + 1.0);
      CHECK(static_cast<double>(union_ceiling(m)) >= exact);
      CHECK(static_cast<double>(union_ceiling(m)) < exact + 1.0);
    }
  }

  TEST_CASE("rational formatting") {
    CHECK(to_decimal(Rational(1, 2)) == "1/2");
    CHECK(to_decimal(Rational(6, 3)) == "2");
    CHECK(to_decimal(Rational(0)) == "0");
  }

  TEST_CASE("finite set basics") {
    FiniteSet a{1, 3, 5}, b{3, 4};
    CHECK(a.size() == 3);
    CHECK(a.to_string() == "{1,3,5}");
    CHECK(FiniteSet{}.to_string() == "{}");
    CHECK((a | b).to_string() == "{1,3,4,5}");
    CHECK((a & b).to_string() == "{3}");
    CHECK((a - b).to_string() == "{1,5}");
    CHECK(a.intersects(b));
    CHECK(a.intersection_size(b) == 1);
    CHECK(FiniteSet{3}.subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.min() == 1);
    CHECK(a.max() == 5);
    CHECK(FiniteSet{}.min() == 0);
    CHECK(FiniteSet{1024}.contains(1024));
    CHECK_THROWS_AS(FiniteSet{0}, Error);
    CHECK_THROWS_AS(FiniteSet{1025}, Error);
    CHECK_FALSE(a.contains(0));
  }

  TEST_CASE("finite set order is lexicographic on ascending sequences") {
    CHECK(FiniteSet{1, 2} < FiniteSet{1, 3});
    CHECK(FiniteSet{1, 9} < FiniteSet{2, 3});
    CHECK(FiniteSet{1} < FiniteSet{1, 2});
    CHECK(FiniteSet{} < FiniteSet{1});
    CHECK(FiniteSet{70} < FiniteSet{71});
    CHECK(FiniteSet{3, 200} < FiniteSet{3, 201});
    CHECK_FALSE(FiniteSet{2} < FiniteSet{1, 5});
  }

  TEST_CASE("k-subsets") {
    auto s = all_k_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == FiniteSet{1, 2});
    CHECK(s.back() == FiniteSet{3, 4});
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(all_k_subsets(5, 0).size() == 1);
    CHECK(all_k_subsets(3, 4).empty());
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) CHECK(BigCount(all_k_subsets(n, k).size()) == binom(n, k));
  }

  TEST_CASE("set families") {
    auto f = SetFamily::uniform(2, {FiniteSet{2, 3}, FiniteSet{1, 2}, FiniteSet{2, 3}});
    CHECK(f.universe == 3);
    CHECK(f.has_duplicates());
    f.normalize();
    CHECK(f.size() == 2);
    CHECK(f.sets[0] == FiniteSet{1, 2});
    CHECK(f.union_all() == FiniteSet{1, 2, 3});
    CHECK(common_size(f) == 2);
    CHECK_THROWS_AS(SetFamily::uniform(2, {FiniteSet{1, 2, 3}}), Error);
    CHECK_THROWS_AS(SetFamily::of({FiniteSet{1, 7}}, 5), Error);
    CHECK_FALSE(common_size(SetFamily::of({FiniteSet{1}, FiniteSet{1, 2}})).has_value());
    CHECK_FALSE(common_size(SetFamily{}).has_value());
  }
}
