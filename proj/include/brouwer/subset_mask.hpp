#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace brouwer {

/// Hard capacity of a SubsetMask, and therefore of every Poset.
inline constexpr std::size_t kMaxPoints = 128;

/// A subset of the points of an ambient poset, as a 128-bit mask.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;

  static SubsetMask single(std::size_t i) {
    SubsetMask m;
    m.set(i);
    return m;
  }

  /// The set {0, ..., n-1}.
  static SubsetMask first(std::size_t n);

  static SubsetMask of(const std::vector<std::size_t>& points) {
    SubsetMask m;
    for (std::size_t p : points) m.set(p);
    return m;
  }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  bool empty() const { return (words_[0] | words_[1]) == 0; }
  bool subset_of(const SubsetMask& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }
  bool intersects(const SubsetMask& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }

  /// Index of the lowest set bit; kMaxPoints when empty.
  std::size_t lowest() const {
    if (words_[0] != 0) return static_cast<std::size_t>(std::countr_zero(words_[0]));
    if (words_[1] != 0) return 64 + static_cast<std::size_t>(std::countr_zero(words_[1]));
    return kMaxPoints;
  }

  SubsetMask& operator|=(const SubsetMask& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  SubsetMask& operator&=(const SubsetMask& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  /// Set difference.
  SubsetMask& operator-=(const SubsetMask& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  /// Numeric order of the 128-bit value.
  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ULL ^ words_[1]);
  }

  std::string to_string() const;

 private:
  std::array<std::uint64_t, 2> words_{};
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

}  // namespace brouwer
