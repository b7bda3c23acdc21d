#include <doctest.h>

#include <cmath>

#include "hap/error.hpp"
#include "hap/housing.hpp"
#include "hap/parallel.hpp"
#include "hap/properties.hpp"
#include "support.hpp"

using namespace hap;

namespace {

SetFamily triangle() { return SetFamily::uniform(2, {FiniteSet{1, 2}, FiniteSet{1, 3}, FiniteSet{2, 3}}); }
SetFamily disjoint_pair() { return SetFamily::uniform(2, {FiniteSet{1, 2}, FiniteSet{3, 4}}); }

// P and Q straight from the definitions over every subfamily (n <= 14).
bool p_by_definition(const std::vector<FiniteSet>& sets, int m) {
  const int n = static_cast<int>(sets.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    bool some_small = false;
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (testing::private_size(sets, idx, j) <= m / k) some_small = true;
    if (!some_small) return false;
  }
  return true;
}

bool q_by_definition(const std::vector<FiniteSet>& sets, int m) {
  const int n = static_cast<int>(sets.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    FiniteSet u;
    int k = 0, limit = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) {
        u |= sets[static_cast<std::size_t>(i)];
        ++k;
        limit += m / k;
      }
    if (u.size() > limit) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("property P examples") {
    CHECK(has_property_p(triangle(), 2, CheckMode::Exact).holds);
    auto v = has_property_p(disjoint_pair(), 2, CheckMode::Exact);
    CHECK_FALSE(v.holds);
    CHECK(v.k == 2);
    CHECK(v.witness_sets == std::vector<FiniteSet>{FiniteSet{1, 2}, FiniteSet{3, 4}});
    CHECK(violates_p(v.witness_sets, 2));
    CHECK(has_property_p(SetFamily::uniform(3, {FiniteSet{1, 2, 3}}), 3, CheckMode::Exact).holds);
    CHECK(has_property_p(SetFamily{}, 3, CheckMode::Exact).holds);
  }

  TEST_CASE("property Q examples") {
    CHECK(has_property_q(triangle(), 2, CheckMode::Exact).holds);
    auto v = has_property_q(disjoint_pair(), 2, CheckMode::Exact);
    CHECK_FALSE(v.holds);
    CHECK(v.k == 2);
    CHECK(has_property_q(SetFamily::uniform(4, {FiniteSet{1, 2, 3, 4}}), 4, CheckMode::Exact).holds);
  }

  TEST_CASE("non-uniform input is rejected") {
    auto f = SetFamily::of({FiniteSet{1, 2}, FiniteSet{1, 2, 3}});
    CHECK_THROWS_AS(has_property_p(f, 2, CheckMode::Exact), Error);
    CHECK_THROWS_AS(has_property_q(f, 3, CheckMode::Refute), Error);
    CHECK_THROWS_AS(has_property_p(triangle(), 0, CheckMode::Exact), Error);
  }

  TEST_CASE("duplicates do not matter") {
    auto f = SetFamily::uniform(2, {FiniteSet{1, 2}, FiniteSet{1, 2}, FiniteSet{1, 3}});
    CHECK(has_property_p(f, 2, CheckMode::Exact).holds);
    CHECK(has_property_q(f, 2, CheckMode::Exact).holds);
  }

  TEST_CASE("union limit") {
    CHECK(q_union_limit(2, 1) == 2);
    CHECK(q_union_limit(2, 3) == 3);
    CHECK(q_union_limit(4, 4) == 4 + 2 + 1 + 1);
    CHECK(q_union_limit(3, 10) == 3 + 1 + 1);
  }

  TEST_CASE("union bound examples") {
    CHECK(union_bound_check(triangle(), 2));
    CHECK(union_bound_check(SetFamily::uniform(1, {FiniteSet{1}}), 1));
    CHECK(union_bound_check(h_construction(4), 4));
    CHECK_FALSE(union_bound_check(disjoint_pair(), 2));
  }

  TEST_CASE("h construction") {
    CHECK(h_construction(2) == triangle());
    CHECK(h_construction(1).sets == std::vector<FiniteSet>{FiniteSet{1}});
    CHECK(h_construction(4).size() == 15);
    CHECK_THROWS_AS(h_construction(13), Error);
    for (int m = 1; m <= 4; ++m) {
      auto f = h_construction(m);
      CHECK(has_property_q(f, m, CheckMode::Exact).holds);
      CHECK(union_bound_check(f, m));
    }
  }

  TEST_CASE("exact kernels match the definitions and the brute-force reference") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
      const int m = 1 + trial % 4;
      const int u = m + 1 + static_cast<int>(rng() % 4);
      const int count = 1 + static_cast<int>(rng() % 12);
      auto f = testing::random_uniform_family(m, u, count, rng);
      for (auto property : {Property::P, Property::Q}) {
        auto fast = property == Property::P ? has_property_p(f, m, CheckMode::Exact)
                                            : has_property_q(f, m, CheckMode::Exact);
        auto ref = reference::has_property_bruteforce(f, m, property);
        const bool def = property == Property::P ? p_by_definition(f.sets, m) : q_by_definition(f.sets, m);
        CHECK(fast.holds == def);
        CHECK(ref.holds == def);
        CHECK(fast.witness_indices == ref.witness_indices);
      }
    }
  }

  TEST_CASE("P implies Q and both are hereditary") {
    std::mt19937_64 rng(8);
    int with_p = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int m = 2 + trial % 3;
      auto f = testing::random_uniform_family(m, m + 2, 2 + static_cast<int>(rng() % 6), rng);
      const bool p = has_property_p(f, m, CheckMode::Exact).holds;
      const bool q = has_property_q(f, m, CheckMode::Exact).holds;
      if (p) {
        ++with_p;
        CHECK(q);
      }
      if (q) CHECK(union_bound_check(f, m));
      // drop a random member
      auto sub = f;
      sub.sets.erase(sub.sets.begin() + static_cast<long>(rng() % sub.sets.size()));
      if (p) CHECK(has_property_p(sub, m, CheckMode::Exact).holds);
      if (q) CHECK(has_property_q(sub, m, CheckMode::Exact).holds);
    }
    CHECK(with_p > 0);
  }

  TEST_CASE("reachable families have property P") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 2 + trial % 5;
      auto p = random_profile(m, m + 3, m, rng);
      auto fam = reachable_family_by_permutations(p).family;
      CHECK(has_property_p(fam, m, CheckMode::Exact).holds);
    }
  }

  TEST_CASE("refute mode") {
    auto v = has_property_p(disjoint_pair(), 2, CheckMode::Refute);
    CHECK_FALSE(v.holds);
    CHECK(v.mode == CheckMode::Refute);
    CheckConfig cfg;
    cfg.samples = 20000;
    cfg.seed = 5;
    cfg.small_tuples = 3;
    for (int m = 5; m <= 6; ++m) CHECK(has_property_q(h_construction(m), m, CheckMode::Refute, cfg).holds);
    // pairwise disjoint triples
    std::vector<FiniteSet> sets;
    for (int i = 0; i < 7; ++i) sets.push_back(FiniteSet{3 * i + 1, 3 * i + 2, 3 * i + 3});
    auto wide = SetFamily::uniform(3, sets);
    CHECK_FALSE(has_property_q(wide, 3, CheckMode::Refute, cfg).holds);
  }

  TEST_CASE("refute mode is seeded and thread independent") {
    std::mt19937_64 rng(44);
    auto f = testing::random_uniform_family(4, 9, 60, rng);
    CheckConfig cfg;
    cfg.samples = 30000;
    cfg.seed = 77;
    cfg.small_tuples = 1;
    auto a = has_property_q(f, 4, CheckMode::Refute, cfg);
    parallel::ThreadScope one(1);
    auto b = has_property_q(f, 4, CheckMode::Refute, cfg);
    CHECK(a.holds == b.holds);
    CHECK(a.witness_indices == b.witness_indices);
  }

  TEST_CASE("exact mode budget") {
    // all 4-subsets of [6] have P, so every tuple size must be searched
    auto fam = h_construction(4);
    REQUIRE(has_property_p(fam, 4, CheckMode::Exact).holds);
    CheckConfig cfg;
    cfg.node_budget = 10;
    try {
      has_property_p(fam, 4, CheckMode::Exact, cfg);
      FAIL("expected the budget to run out");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ModeInfeasible);
    }
  }

  TEST_CASE("g and h oracles at m = 2") {
    auto g = g_oracle(2, 5);
    CHECK(g.value == 3);
    CHECK(g.exact);
    CHECK(g.witness.sets == triangle().sets);
    auto h = h_oracle(2, 5);
    CHECK(h.value == 3);
    CHECK(h.exact);
    CHECK(g_oracle(1, 4).value == 1);
    CHECK(h_oracle(1, 4).value == 1);
    CHECK_THROWS_AS(g_oracle(3, 6), Error);
    OracleBudget relaxed{false, 2'000'000};
    auto g3 = g_oracle(3, 6, relaxed);
    CHECK(g3.value >= 4);
    CHECK(has_property_p(g3.witness, 3, CheckMode::Exact).holds);
  }
}
