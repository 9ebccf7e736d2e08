#include "dflag/bit_vector.hpp"

#include <cassert>
#include <stdexcept>

namespace dflag {

BitVector& BitVector::operator&=(const BitVector& other) {
  assert(length_ == other.length_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

void BitVector::assign_and(const BitVector& a, const BitVector& b) {
  assert(a.length_ == length_ && b.length_ == length_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
}

BitVector BitVector::complement() const {
  BitVector out(length_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (const std::size_t tail = length_ % kWordBits; tail != 0 && !out.words_.empty())
    out.words_.back() &= (Word{1} << tail) - 1;
  return out;
}

BitVector intersect_all(std::span<const BitVector> rows) {
  if (rows.empty()) throw std::invalid_argument("intersect_all: no rows");
  BitVector out = rows.front();
  for (const auto& row : rows.subspan(1)) {
    if (row.length() != out.length()) throw std::invalid_argument("intersect_all: length mismatch");
    out &= row;
  }
  return out;
}

}  // namespace dflag
