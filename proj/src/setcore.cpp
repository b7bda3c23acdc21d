#include "hap/setcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hap/error.hpp"
#include "hap/finite_set.hpp"
#include "hap/set_family.hpp"

namespace hap {

BigCount binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  // r * (n - k + i) is always divisible by i after the previous steps.
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

int ell(std::uint64_t m) {
  require(m >= 1, ErrorKind::Input, "ell requires m >= 1");
  auto pow_le = [](std::uint64_t base, std::uint64_t limit) {
    BigCount p = 1;
    for (std::uint64_t i = 0; i < base; ++i) p *= base;
    return p <= limit;
  };
  int l = 1;
  while (pow_le(static_cast<std::uint64_t>(l) + 1, m)) ++l;
  return l;
}

BigCount reachable_bound_with_ell(int m, int l) {
  long top = 2L * m - l + 4;
  if (top < 0) return 0;
  return binom(static_cast<std::uint64_t>(top), static_cast<std::uint64_t>(m));
}

std::uint64_t union_ceiling(int m) {
  require(m >= 1, ErrorKind::Input, "union_ceiling requires m >= 1");
  double v = m * (std::log(static_cast<double>(m)) + 1.0);
  return static_cast<std::uint64_t>(std::ceil(v));
}

BoundsReport bounds_report(int m) {
  require(m >= 1, ErrorKind::Input, "bounds_report requires m >= 1");
  BoundsReport r;
  r.m = m;
  r.ell = ell(static_cast<std::uint64_t>(m));
  r.thm_i = reachable_bound_with_ell(m, r.ell);
  r.thm_ii = binom(2 * static_cast<std::uint64_t>(m) - 1, m);
  r.prop_lower = binom(static_cast<std::uint64_t>(3 * m / 2), m);
  r.akm_upper = binom(union_ceiling(m), m);
  return r;
}

std::string to_decimal(const BigCount& v) { return v.str(); }

std::string to_decimal(const Rational& v) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(v);
  if (boost::multiprecision::denominator(v) != 1) os << '/' << boost::multiprecision::denominator(v);
  return os.str();
}

std::string FiniteSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int e) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  });
  return s + "}";
}

void SetFamily::validate() const {
  require(universe >= 1 && universe <= kMaxUniverse, ErrorKind::Input,
          "universe size " + std::to_string(universe) + " outside [1, 1024]");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    int hi = sets[i].max();
    require(hi <= universe, ErrorKind::Input,
            "set " + std::to_string(i + 1) + " has element " + std::to_string(hi) + " outside universe " +
                std::to_string(universe));
    if (uniformity)
      require(sets[i].size() == *uniformity, ErrorKind::Input,
              "set " + std::to_string(i + 1) + " has size " + std::to_string(sets[i].size()) + ", expected " +
                  std::to_string(*uniformity));
  }
}

void SetFamily::normalize() {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

FiniteSet SetFamily::union_all() const {
  FiniteSet u;
  for (const auto& s : sets) u |= s;
  return u;
}

bool SetFamily::has_duplicates() const {
  auto copy = sets;
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) != copy.end();
}

static int max_element_of(const std::vector<FiniteSet>& sets) {
  int hi = 1;
  for (const auto& s : sets) hi = std::max(hi, s.max());
  return hi;
}

SetFamily SetFamily::uniform(int m, std::vector<FiniteSet> sets, std::optional<int> universe) {
  SetFamily f;
  f.universe = universe.value_or(max_element_of(sets));
  f.sets = std::move(sets);
  f.uniformity = m;
  f.validate();
  return f;
}

SetFamily SetFamily::of(std::vector<FiniteSet> sets, std::optional<int> universe) {
  SetFamily f;
  f.universe = universe.value_or(max_element_of(sets));
  f.sets = std::move(sets);
  f.validate();
  return f;
}

std::optional<int> common_size(const SetFamily& family) {
  if (family.empty()) return std::nullopt;
  int m = family.sets.front().size();
  for (const auto& s : family.sets)
    if (s.size() != m) return std::nullopt;
  return m;
}

std::vector<FiniteSet> all_k_subsets(int n, int k) {
  std::vector<FiniteSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(FiniteSet::from(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace hap
