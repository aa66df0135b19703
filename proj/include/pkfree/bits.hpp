#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pkfree {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Fixed-width bit set over a vertex universe [0, n).
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  template <class Range>
  BitMask(std::size_t bits, const Range& members) : BitMask(bits) {
    for (auto v : members) set(static_cast<std::size_t>(v));
  }

  std::size_t bits() const noexcept { return bits_; }
  std::span<const Word> words() const noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

// |a AND b|
inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

// Lowest index set in (a AND b), or npos.
inline std::size_t first_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word w = a[i] & b[i];
    if (w) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
  }
  return static_cast<std::size_t>(-1);
}

// Lowest index set in (NOT a) AND b, or npos.
inline std::size_t first_andnot(std::span<const Word> a, std::span<const Word> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word w = ~a[i] & b[i];
    if (w) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace pkfree
