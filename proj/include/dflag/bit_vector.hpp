#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dflag {

/// Fixed-length packed bitset. Bits past length() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  std::size_t length() const noexcept { return length_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t popcount() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// this &= other. Lengths must match.
  BitVector& operator&=(const BitVector& other);

  /// Writes a & b into this without reallocating. All three lengths must match.
  void assign_and(const BitVector& a, const BitVector& b);

  BitVector complement() const;

  /// Calls f(i) for each set bit in ascending order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Logical AND of all rows. Rows must be non-empty in number and equal in length.
BitVector intersect_all(std::span<const BitVector> rows);

}  // namespace dflag
