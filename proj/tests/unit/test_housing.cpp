#include <doctest.h>

#include <map>

#include "hap/error.hpp"
#include "hap/housing.hpp"
#include "hap/parallel.hpp"
#include "hap/setcore.hpp"
#include "support.hpp"

using namespace hap;

namespace {

PreferenceProfile two_buyers() { return PreferenceProfile::make(3, {{1, 2}, {1, 3}}); }

std::vector<int> order_of(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int b : one_based) out.push_back(b - 1);
  return out;
}

}  // namespace

TEST_SUITE("housing") {
  TEST_CASE("greedy matching by hand") {
    auto single = PreferenceProfile::make(7, {{7, 2}});
    auto o1 = order_of({1});
    CHECK(greedy_matching(single, o1).assignment == std::vector<int>{7});

    auto p = two_buyers();
    auto o12 = order_of({1, 2});
    auto o21 = order_of({2, 1});
    auto t12 = greedy_matching(p, o12);
    auto t21 = greedy_matching(p, o21);
    CHECK(t12.assignment == std::vector<int>{1, 3});
    CHECK(t12.image() == FiniteSet{1, 3});
    CHECK(t21.assignment == std::vector<int>{2, 1});
    CHECK(t21.image() == FiniteSet{1, 2});
  }

  TEST_CASE("profile validation names the row") {
    CHECK_THROWS_AS(PreferenceProfile::make(3, {{1, 1}, {1, 3}}), Error);
    CHECK_THROWS_AS(PreferenceProfile::make(3, {{1, 2}, {1}}), Error);
    CHECK_THROWS_AS(PreferenceProfile::make(3, {{1, 4}, {1, 2}}), Error);
    try {
      PreferenceProfile::make(3, {{1, 2}, {3, 3}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Input);
      CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
  }

  TEST_CASE("one-POM check") {
    auto p = two_buyers();
    CHECK(is_one_pom(p, Matching{{1, 3}}));
    CHECK(is_one_pom(p, Matching{{2, 1}}));
    // buyer 2 holds house 3 while its favourite house 1 sits empty
    CHECK_FALSE(is_one_pom(p, Matching{{2, 3}}));
    CHECK_THROWS_AS(is_one_pom(p, Matching{{1, 1}}), Error);
  }

  TEST_CASE("blocking coalitions") {
    auto p = PreferenceProfile::make(2, {{1, 2}, {2, 1}});
    // each buyer holds the other's favourite: swapping helps both
    auto c = find_blocking_coalition(p, Matching{{2, 1}}, 2);
    REQUIRE(c.has_value());
    CHECK(c->buyers == std::vector<int>{0, 1});
    CHECK(c->improved.assignment == std::vector<int>{1, 2});
    CHECK_FALSE(find_blocking_coalition(p, Matching{{2, 1}}, 1).has_value());
    CHECK_FALSE(find_blocking_coalition(p, Matching{{1, 2}}, 2).has_value());
  }

  TEST_CASE("greedy outcomes admit no blocking coalition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
      const int m = 2 + trial % 3;
      auto p = random_profile(m, m + 2, m + 1, rng);
      auto order = testing::iota_order(m);
      do {
        auto tau = greedy_matching(p, order);
        CHECK(is_one_pom(p, tau));
        CHECK_FALSE(find_blocking_coalition(p, tau, m).has_value());
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }

  TEST_CASE("reachable family examples") {
    auto fam = reachable_family_by_permutations(two_buyers());
    CHECK(fam.family.sets == std::vector<FiniteSet>{FiniteSet{1, 2}, FiniteSet{1, 3}});
    CHECK(fam.provenance == Provenance::Permutations);
    CHECK_FALSE(fam.lower_bound);
    auto same = PreferenceProfile::make(4, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    CHECK(reachable_family_by_permutations(same).family.size() == 1);
    CHECK(reachable_family_by_one_poms(same).family.size() == 1);
  }

  TEST_CASE("enumerators agree with the definition") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const int m = 1 + trial % 6;
      const int u = m + static_cast<int>(rng() % 4);
      const int len = m + static_cast<int>(rng() % (u - m + 1));
      auto p = random_profile(m, u, std::min(len, 8), rng);
      auto expected = testing::reachable_by_definition(p);
      auto by_perm = reachable_family_by_permutations(p);
      auto by_pom = reachable_family_by_one_poms(p);
      auto by_ref = reference::reachable_family_by_permutations(p);
      CHECK(testing::as_sets(by_perm.family) == expected);
      CHECK(by_perm.family == by_pom.family);
      CHECK(by_perm.family == by_ref.family);
    }
  }

  TEST_CASE("enumeration is independent of the thread count") {
    std::mt19937_64 rng(5);
    auto p = random_profile(8, 14, 8, rng);
    parallel::ThreadScope one(1);
    auto serial = reachable_family_by_permutations(p);
    parallel::ThreadScope four(4);
    CHECK(reachable_family_by_permutations(p).family == serial.family);
  }

  TEST_CASE("family size bounds") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 1 + trial % 6;
      auto p = random_profile(m, 2 * m, m, rng);
      const auto n = reachable_family_by_permutations(p).family.size();
      long long fact = 1;
      for (int i = 2; i <= m; ++i) fact *= i;
      CHECK(static_cast<long long>(n) <= fact);
      CHECK(BigCount(n) <= binom(2 * m - 1, m));
    }
  }

  TEST_CASE("a fresh buyer keeps every reachable set, extended by its top house") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const int m = 1 + trial % 4;
      auto p = random_profile(m, 2 * m, m, rng);
      auto q = extend_with_fresh_buyer(p);
      CHECK(q.m == m + 1);
      auto small = reachable_family_by_permutations(p).family;
      auto big = reachable_family_by_permutations(q).family;
      CHECK(big.size() >= small.size());
      const int fresh = q.rows.back().front();
      for (const auto& s : small.sets) {
        FiniteSet grown = s;
        grown.insert(fresh);
        CHECK(std::find(big.sets.begin(), big.sets.end(), grown) != big.sets.end());
      }
    }
  }

  TEST_CASE("enumerator limits") {
    std::mt19937_64 rng(1);
    auto big = random_profile(7, 9, 7, rng);
    CHECK_THROWS_AS(reachable_family_by_one_poms(big), Error);
    auto huge = random_profile(11, 12, 11, rng);
    CHECK_THROWS_AS(reachable_family_by_permutations(huge), Error);
  }

  TEST_CASE("sampling gives a subfamily") {
    std::mt19937_64 rng(17);
    auto p = random_profile(6, 10, 6, rng);
    auto full = reachable_family_by_permutations(p).family;
    auto sample = sample_reachable_family(p, 200, 42);
    CHECK(sample.lower_bound);
    CHECK(sample.provenance == Provenance::PermutationSample);
    for (const auto& s : sample.family.sets)
      CHECK(std::find(full.sets.begin(), full.sets.end(), s) != full.sets.end());
    CHECK(sample_reachable_family(p, 200, 42).family == sample.family);
  }

  TEST_CASE("canonical forms") {
    auto p = PreferenceProfile::make(9, {{9, 4}, {4, 7}});
    auto c = canonical_form(p);
    CHECK(c.rows == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    auto swapped = PreferenceProfile::make(9, {{4, 7}, {9, 4}});
    CHECK(canonical_form(swapped) == c);
    CHECK(canonical_profiles(1).size() == 1);
    // m=2: rows over labels; count classes by brute force
    std::set<std::vector<std::vector<int>>> classes;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int c1 = 1; c1 <= 4; ++c1)
          for (int d = 1; d <= 4; ++d) {
            if (a == b || c1 == d) continue;
            classes.insert(canonical_form(PreferenceProfile::make(4, {{a, b}, {c1, d}})).rows);
          }
    auto listed = canonical_profiles(2);
    CHECK(listed.size() == classes.size());
    CHECK(std::is_sorted(listed.begin(), listed.end()));
  }

  TEST_CASE("f oracle small values") {
    auto f1 = f_oracle(1, {});
    CHECK(f1.value == 1);
    CHECK(f1.exact);
    auto f2 = f_oracle(2, {});
    CHECK(f2.value == 2);
    CHECK(f2.witness.rows == std::vector<std::vector<int>>{{1, 2}, {1, 3}});
    CHECK_THROWS_AS(f_oracle(4, {}), Error);
  }

  TEST_CASE("f(3) against an independent sweep over [6]") {
    // Every multiset of three 3-rows over six houses. This only bounds f(3)
    // from below, so it has to meet the oracle once the witness fits in [6].
    auto f3 = f_oracle(3, {});
    std::vector<std::vector<int>> rows;
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b)
        for (int c = 1; c <= 6; ++c)
          if (a != b && b != c && a != c) rows.push_back({a, b, c});
    int best = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i; j < rows.size(); ++j)
        for (std::size_t k = j; k < rows.size(); ++k) {
          auto p = PreferenceProfile::make(6, {rows[i], rows[j], rows[k]});
          best = std::max(best, static_cast<int>(testing::reachable_by_definition(p).size()));
        }
    CHECK(f3.value == best);
    CHECK(f3.witness.universe <= 6);
  }

  TEST_CASE("heuristic f oracle is seeded") {
    FOracleConfig cfg;
    cfg.exhaustive = false;
    cfg.seed = 9;
    cfg.restarts = 8;
    cfg.iterations = 60;
    auto a = f_oracle(4, cfg);
    auto b = f_oracle(4, cfg);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK_FALSE(a.exact);
    CHECK(static_cast<int>(reachable_family_by_permutations(a.witness).family.size()) == a.value);
    {
      parallel::ThreadScope one(1);
      CHECK(f_oracle(4, cfg).witness == a.witness);
    }
  }
}
