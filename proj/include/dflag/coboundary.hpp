#pragma once

#include <cstdint>
#include <vector>

#include "dflag/complex_store.hpp"
#include "dflag/field.hpp"
#include "dflag/filtration.hpp"
#include "dflag/graph.hpp"
#include "dflag/simplex.hpp"

namespace dflag {

struct Coface {
  std::size_t position;  // insertion index p, 0 <= p <= k + 1
  Simplex simplex;
  friend bool operator==(const Coface&, const Coface&) = default;
};

/// Every coface of the k-simplex s, obtained by inserting a vertex w at position p;
/// w must receive an edge from v_0..v_{p-1} and send one to v_p..v_k. Sorted by p, then w.
std::vector<Coface> cofaces(const DirectedGraph& g, SimplexView s);

struct ColumnEntry {
  SimplexId row;
  Coefficient coeff;
  friend bool operator==(const ColumnEntry&, const ColumnEntry&) = default;
};

struct SparseColumn {
  SimplexId simplex_id;
  double filtration;
  std::vector<ColumnEntry> entries;  // rows strictly increasing
};

/// Coboundary matrix delta_k. Column c is the k-simplex with id c. Rows index
/// (k+1)-simplices ranked by (filtration descending, id ascending), so the
/// largest row of a column is its earliest coface; under the zero filtration
/// row r is simply the (k+1)-simplex with id r.
struct CoboundaryMatrix {
  std::size_t dimension = 0;
  std::vector<SparseColumn> columns;
  std::vector<SimplexId> order;           // reduction order, see sort_columns
  std::vector<SimplexId> row_simplex;     // row -> (k+1)-simplex id
  std::vector<double> row_filtration;     // row -> filtration value

  std::size_t row_count() const noexcept { return row_simplex.size(); }
};

struct PivotStats {
  std::size_t nnz;
  std::int64_t pivot;  // largest row, -1 when empty
  std::int64_t gap;    // pivot minus next-largest row; pivot + 1 for one entry; 0 when empty
};
PivotStats pivot_stats(const SparseColumn& column);

/// Column reduction order: filtration descending, then fewer nonzeros, then
/// larger pivot row, then larger pivot gap, then smaller simplex id.
std::vector<SimplexId> sort_columns(const CoboundaryMatrix& m);

/// Parallel over columns; faces holds the k-simplices and cofaces_index the
/// (k+1)-simplices of g. Throws std::logic_error if a coface is missing.
CoboundaryMatrix build_matrix(const SimplexIndex& faces, const SimplexIndex& cofaces_index, const DirectedGraph& g,
                              const FiltrationSpec& spec, const PrimeField& field, int threads = 1);

CoboundaryMatrix build_matrix(const ComplexStore& store, const DirectedGraph& g, std::size_t k,
                              const FiltrationSpec& spec, const PrimeField& field, int threads = 1);

/// Single-threaded reference for build_matrix built on cofaces().
CoboundaryMatrix build_matrix_serial(const SimplexIndex& faces, const SimplexIndex& cofaces_index,
                                     const DirectedGraph& g, const FiltrationSpec& spec, const PrimeField& field);

}  // namespace dflag
