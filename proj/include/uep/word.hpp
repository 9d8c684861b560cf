#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "uep/error.hpp"

namespace uep {

/// Binary word of runtime length n <= MaxBits. Coordinate 0 is the most
/// significant one, both in text form and in the integer index used by the
/// enumeration routines, so lexicographic and numeric order agree.
template <std::size_t MaxBits>
class BasicWord {
  static_assert(MaxBits % 64 == 0);
  static constexpr std::size_t kBlocks = MaxBits / 64;

 public:
  static constexpr std::size_t kMaxLength = MaxBits;

  BasicWord() = default;

  explicit BasicWord(std::size_t length) : length_(length) {
    require(length <= MaxBits, "word length exceeds " + std::to_string(MaxBits));
  }

  /// Word whose coordinates are the n low bits of `index`, high bit first.
  static BasicWord from_index(std::size_t length, std::uint64_t index) {
    require(length <= 64, "from_index: length must be <= 64");
    BasicWord w(length);
    for (std::size_t i = 0; i < length; ++i)
      if ((index >> (length - 1 - i)) & 1U) w.set(i, true);
    return w;
  }

  static BasicWord parse(std::string_view bits) {
    BasicWord w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') fail(ErrorKind::kMalformedInput, "word must contain only 0 and 1");
      w.set(i, bits[i] == '1');
    }
    return w;
  }

  std::size_t size() const { return length_; }

  bool get(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1U; }

  void set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
      blocks_[i / 64] |= bit;
    else
      blocks_[i / 64] &= ~bit;
  }

  void flip(std::size_t i) { blocks_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
    return w;
  }

  BasicWord& operator^=(const BasicWord& other) {
    require(length_ == other.length_, "xor of words with different lengths");
    for (std::size_t i = 0; i < kBlocks; ++i) blocks_[i] ^= other.blocks_[i];
    return *this;
  }

  friend BasicWord operator^(BasicWord a, const BasicWord& b) { return a ^= b; }

  /// Inverse of from_index.
  std::uint64_t to_index() const {
    require(length_ <= 64, "to_index: length must be <= 64");
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < length_; ++i) x = (x << 1) | static_cast<std::uint64_t>(get(i));
    return x;
  }

  std::string str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;

  friend std::strong_ordering operator<=>(const BasicWord& a, const BasicWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t i = 0; i < a.length_; ++i)
      if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  std::size_t length_ = 0;
  std::array<std::uint64_t, kBlocks> blocks_{};
};

using Word = BasicWord<256>;

template <std::size_t MaxBits>
std::size_t hamming_distance(const BasicWord<MaxBits>& a, const BasicWord<MaxBits>& b) {
  return (a ^ b).weight();
}

}  // namespace uep
