#pragma once

// Brute-force reference implementations for cross-checking on small inputs.
// Nothing here calls into enumeration, coboundary construction or reduction.

#include <cstdint>
#include <string_view>
#include <vector>

#include "dflag/graph.hpp"

namespace dflag::oracle {

inline constexpr std::size_t kMaxVertices = 25;
inline constexpr std::size_t kMaxBarcodeCells = 2000;

using Tuple = std::vector<VertexId>;

/// Dense matrix over F_q, row-major.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::uint32_t q) : rows_(rows), cols_(cols), q_(q), a_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return q_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    const auto m = value % static_cast<std::int64_t>(q_);
    a_[r * cols_ + c] = static_cast<std::uint32_t>(m < 0 ? m + q_ : m);
  }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix transpose() const;
  bool is_zero() const;
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::uint32_t q_;
  std::vector<std::uint32_t> a_;
};

/// Every ordered clique of size <= max_dim + 1, grouped by dimension, each group sorted.
/// Throws ResourceLimitError for more than kMaxVertices vertices.
std::vector<std::vector<Tuple>> enumerate(const DirectedGraph& g, std::size_t max_dim = 64);

/// Rank over F_q by Gaussian elimination.
std::size_t rank(DenseMatrix m);

/// Boundary map d_k from k-simplices (columns) to (k-1)-simplices (rows), both in the given order.
DenseMatrix boundary_matrix(const std::vector<Tuple>& simplices, const std::vector<Tuple>& faces, std::uint32_t q);

/// Betti numbers for dimensions 0..min(max_dim, top dimension).
std::vector<std::uint64_t> betti(const DirectedGraph& g, std::size_t max_dim, std::uint32_t q);

struct Bar {
  double birth;
  double death;  // +infinity for essential classes
  friend bool operator==(const Bar&, const Bar&) = default;
  friend auto operator<=>(const Bar&, const Bar&) = default;
};

/// Filter values by name: "zero", "vertex-max", "edge-max" or "max".
double filter_value(std::string_view algorithm, const Tuple& s, const DirectedGraph& g);

/// Standard boundary-matrix persistence over cells ordered by (value, dimension,
/// lexicographic vertex list). Per dimension 0..max_dim, sorted, zero-length
/// bars included. Throws ResourceLimitError past kMaxBarcodeCells cells.
std::vector<std::vector<Bar>> barcode(const DirectedGraph& g, std::string_view algorithm, std::size_t max_dim,
                                      std::uint32_t q);

}  // namespace dflag::oracle
