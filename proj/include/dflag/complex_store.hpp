#pragma once

#include <vector>

#include "dflag/enumerate.hpp"
#include "dflag/simplex.hpp"

namespace dflag {

/// In-memory directed flag complex: one SimplexIndex per dimension. Ids follow
/// the enumeration order with initial vertices ascending, independent of the
/// thread count used to build it.
class ComplexStore {
 public:
  ComplexStore() = default;
  explicit ComplexStore(std::vector<SimplexIndex> dims) : dims_(std::move(dims)) {}

  /// Number of non-empty dimensions held.
  std::size_t dimension_count() const noexcept { return dims_.size(); }
  bool empty() const noexcept { return dims_.empty(); }

  /// Index for dimension d; an empty index past the top dimension.
  const SimplexIndex& dimension(std::size_t d) const;

  std::vector<std::uint64_t> counts() const;

 private:
  std::vector<SimplexIndex> dims_;
  SimplexIndex past_top_;
};

ComplexStore build_store(const DirectedGraph& g, std::size_t max_dim = kUnboundedDim, int threads = 1);

/// Just the d-simplices, numbered exactly as build_store would number them.
SimplexIndex build_dimension_index(const DirectedGraph& g, std::size_t d, int threads = 1);

}  // namespace dflag
