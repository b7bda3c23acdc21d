#pragma once

// Small independent oracles shared by the unit tests. They deliberately avoid
// the library's search kernels.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hap/finite_set.hpp"
#include "hap/housing.hpp"
#include "hap/set_family.hpp"

namespace testing {

inline std::vector<int> iota_order(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Serial dictatorship straight from the definition, over every order.
inline std::set<std::vector<int>> reachable_by_definition(const hap::PreferenceProfile& p) {
  std::set<std::vector<int>> out;
  auto order = iota_order(p.m);
  do {
    std::vector<bool> taken(static_cast<std::size_t>(p.universe) + 1, false);
    std::vector<int> image;
    for (int b : order) {
      for (int h : p.rows[static_cast<std::size_t>(b)]) {
        if (!taken[static_cast<std::size_t>(h)]) {
          taken[static_cast<std::size_t>(h)] = true;
          image.push_back(h);
          break;
        }
      }
    }
    std::sort(image.begin(), image.end());
    out.insert(image);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::set<std::vector<int>> as_sets(const hap::SetFamily& f) {
  std::set<std::vector<int>> out;
  for (const auto& s : f.sets) out.insert(s.elements());
  return out;
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// A random m-uniform family on [u] with `count` distinct members.
inline hap::SetFamily random_uniform_family(int m, int u, int count, std::mt19937_64& rng) {
  std::set<std::vector<int>> chosen;
  std::vector<int> pool(static_cast<std::size_t>(u));
  std::iota(pool.begin(), pool.end(), 1);
  const long long total = choose(u, m);
  count = static_cast<int>(std::min<long long>(count, total));
  while (static_cast<int>(chosen.size()) < count) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> s(pool.begin(), pool.begin() + m);
    std::sort(s.begin(), s.end());
    chosen.insert(s);
  }
  std::vector<hap::FiniteSet> sets;
  for (const auto& s : chosen) sets.push_back(hap::FiniteSet::from(s));
  return hap::SetFamily::uniform(m, std::move(sets), u);
}

// |F_j \ union of the others| for the members listed in idx.
inline int private_size(const std::vector<hap::FiniteSet>& sets, const std::vector<int>& idx, std::size_t j) {
  hap::FiniteSet rest;
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (i != j) rest |= sets[static_cast<std::size_t>(idx[i])];
  return (sets[static_cast<std::size_t>(idx[j])] - rest).size();
}

}  // namespace testing

namespace testing {

// Whether some k members are disjointly representable, by plain subset enumeration.
inline bool has_dr_subfamily(const std::vector<hap::FiniteSet>& sets, int k) {
  const int n = static_cast<int>(sets.size());
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool all_private = true;
    for (std::size_t j = 0; j < idx.size() && all_private; ++j)
      if (private_size(sets, idx, j) == 0) all_private = false;
    if (all_private) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Grows a random m-uniform family on [u], keeping it free of m+1 disjointly
// representable members.
inline hap::SetFamily random_dr_free_family(int m, int u, int attempts, std::mt19937_64& rng) {
  std::vector<hap::FiniteSet> sets;
  std::vector<int> pool(static_cast<std::size_t>(u));
  std::iota(pool.begin(), pool.end(), 1);
  for (int a = 0; a < attempts; ++a) {
    std::shuffle(pool.begin(), pool.end(), rng);
    auto s = hap::FiniteSet::from(std::vector<int>(pool.begin(), pool.begin() + m));
    if (std::find(sets.begin(), sets.end(), s) != sets.end()) continue;
    sets.push_back(s);
    if (has_dr_subfamily(sets, m + 1)) sets.pop_back();
  }
  return hap::SetFamily::uniform(m, std::move(sets), u);
}

}  // namespace testing
