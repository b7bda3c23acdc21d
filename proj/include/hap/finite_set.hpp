#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hap/error.hpp"

namespace hap {

/// Largest ground-set size supported by the bit-vector representation.
inline constexpr int kMaxUniverse = 1024;

/// A subset of {1, ..., kMaxUniverse} stored as a fixed-width bit vector.
/// Element e occupies bit e - 1.
class FiniteSet {
 public:
  static constexpr int kWords = kMaxUniverse / 64;

  FiniteSet() = default;
  FiniteSet(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }
  static FiniteSet from(std::span<const int> elems) {
    FiniteSet s;
    for (int e : elems) s.insert(e);
    return s;
  }
  /// {1, ..., n}
  static FiniteSet interval(int n) {
    FiniteSet s;
    for (int e = 1; e <= n; ++e) s.insert(e);
    return s;
  }

  static bool in_range(int e) { return e >= 1 && e <= kMaxUniverse; }

  void insert(int e) {
    require(in_range(e), ErrorKind::Input, "element " + std::to_string(e) + " outside [1, 1024]");
    words_[word(e)] |= bit(e);
  }
  void erase(int e) {
    if (in_range(e)) words_[word(e)] &= ~bit(e);
  }
  bool contains(int e) const { return in_range(e) && (words_[word(e)] & bit(e)) != 0; }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Smallest element, or 0 when empty.
  int min() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]) + 1;
    return 0;
  }
  /// Largest element, or 0 when empty.
  int max() const {
    for (int i = kWords - 1; i >= 0; --i)
      if (words_[i]) return i * 64 + 63 - std::countl_zero(words_[i]) + 1;
    return 0;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      for (auto w = words_[i]; w; w &= w - 1) f(i * 64 + std::countr_zero(w) + 1);
    }
  }

  FiniteSet& operator|=(const FiniteSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  FiniteSet& operator&=(const FiniteSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  FiniteSet& operator-=(const FiniteSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend FiniteSet operator|(FiniteSet a, const FiniteSet& b) { return a |= b; }
  friend FiniteSet operator&(FiniteSet a, const FiniteSet& b) { return a &= b; }
  friend FiniteSet operator-(FiniteSet a, const FiniteSet& b) { return a -= b; }

  bool intersects(const FiniteSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int intersection_size(const FiniteSet& o) const {
    int n = 0;
    for (int i = 0; i < kWords; ++i) n += std::popcount(words_[i] & o.words_[i]);
    return n;
  }
  bool subset_of(const FiniteSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

  /// Lexicographic order of the ascending element sequences.
  friend bool operator<(const FiniteSet& a, const FiniteSet& b) {
    for (int i = 0; i < kWords; ++i) {
      auto diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      auto low = diff & (~diff + 1);
      // The set owning the first differing element is smaller unless the
      // other sequence ends before reaching it.
      const FiniteSet& owner = (a.words_[i] & low) ? a : b;
      const FiniteSet& other = (a.words_[i] & low) ? b : a;
      bool other_continues = (other.words_[i] & ~(low | (low - 1))) != 0;
      for (int j = i + 1; j < kWords && !other_continues; ++j) other_continues = other.words_[j] != 0;
      return other_continues ? (&owner == &a) : (&owner == &b);
    }
    return false;
  }

  std::span<const std::uint64_t, kWords> words() const { return words_; }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  /// "{1,3,5}"
  std::string to_string() const;

 private:
  static int word(int e) { return (e - 1) >> 6; }
  static std::uint64_t bit(int e) { return std::uint64_t{1} << ((e - 1) & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

struct FiniteSetHash {
  std::size_t operator()(const FiniteSet& s) const { return s.hash(); }
};

}  // namespace hap
