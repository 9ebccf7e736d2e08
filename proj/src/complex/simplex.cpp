#include "dflag/simplex.hpp"

#include <bit>

namespace dflag {

std::uint64_t hash_simplex(SimplexView s) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ s.size();
  for (VertexId v : s) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 31;
  }
  return h;
}

SimplexIndex::SimplexIndex(std::size_t dimension, std::vector<VertexId> flat_vertices)
    : arity_(dimension + 1), flat_(std::move(flat_vertices)) {
  rebuild_table();
}

void SimplexIndex::rebuild_table() {
  const std::size_t capacity = std::bit_ceil(std::max<std::size_t>(8, 2 * size()));
  slots_.assign(capacity, kEmptySlot);
  const std::size_t mask = capacity - 1;
  for (SimplexId id = 0; id < size(); ++id) {
    std::size_t slot = hash_simplex((*this)[id]) & mask;
    while (slots_[slot] != kEmptySlot) slot = (slot + 1) & mask;
    slots_[slot] = id;
  }
}

std::optional<SimplexId> SimplexIndex::find(SimplexView s) const noexcept {
  if (s.size() != arity_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t slot = hash_simplex(s) & mask; slots_[slot] != kEmptySlot; slot = (slot + 1) & mask) {
    const auto candidate = (*this)[slots_[slot]];
    if (std::equal(candidate.begin(), candidate.end(), s.begin())) return slots_[slot];
  }
  return std::nullopt;
}

}  // namespace dflag
