#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "dflag/graph.hpp"

namespace dflag {

/// Ordered vertex list (v_0, ..., v_k) of a k-simplex. Inline up to 8 vertices.
using Simplex = boost::container::small_vector<VertexId, 8>;
using SimplexView = std::span<const VertexId>;
using SimplexId = std::uint64_t;

inline std::size_t dimension_of(SimplexView s) noexcept { return s.size() - 1; }

std::uint64_t hash_simplex(SimplexView s) noexcept;

/// All simplices of one dimension, numbered consecutively from 0 in insertion
/// order, with an open-addressing hash index for vertex-list lookup.
class SimplexIndex {
 public:
  explicit SimplexIndex(std::size_t dimension = 0) : arity_(dimension + 1) {}

  /// Takes the simplices as one flat array with stride dimension + 1.
  SimplexIndex(std::size_t dimension, std::vector<VertexId> flat_vertices);

  std::size_t dimension() const noexcept { return arity_ - 1; }
  std::size_t size() const noexcept { return flat_.size() / arity_; }
  bool empty() const noexcept { return flat_.empty(); }

  SimplexView operator[](SimplexId id) const noexcept { return {flat_.data() + id * arity_, arity_}; }

  std::optional<SimplexId> find(SimplexView s) const noexcept;

 private:
  static constexpr SimplexId kEmptySlot = ~SimplexId{0};

  void rebuild_table();

  std::size_t arity_;
  std::vector<VertexId> flat_;
  std::vector<SimplexId> slots_;
};

}  // namespace dflag
