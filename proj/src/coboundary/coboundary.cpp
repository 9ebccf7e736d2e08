#include "dflag/coboundary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <omp.h>

namespace dflag {
namespace {

/// Reusable bitset scratch for coface enumeration of one simplex at a time.
class CofaceScanner {
 public:
  explicit CofaceScanner(const DirectedGraph& g) : g_(g) {}

  // f(p, w) for each insertion; s's own vertices never appear because the graph has no loops.
  template <class F>
  void scan(SimplexView s, F&& f) {
    const std::size_t n = g_.vertex_count();
    const std::size_t k1 = s.size();
    while (prefix_.size() <= k1) prefix_.emplace_back(n);
    while (suffix_.size() <= k1) suffix_.emplace_back(n);
    prefix_[0] = BitVector(n).complement();
    for (std::size_t p = 0; p < k1; ++p) prefix_[p + 1].assign_and(prefix_[p], g_.out_row(s[p]));
    suffix_[k1] = prefix_[0];
    for (std::size_t p = k1; p-- > 0;) suffix_[p].assign_and(suffix_[p + 1], g_.in_row(s[p]));
    if (candidates_.length() != n) candidates_ = BitVector(n);
    for (std::size_t p = 0; p <= k1; ++p) {
      candidates_.assign_and(prefix_[p], suffix_[p]);
      candidates_.for_each_set([&](std::size_t w) { f(p, static_cast<VertexId>(w)); });
    }
  }

 private:
  const DirectedGraph& g_;
  std::vector<BitVector> prefix_;  // prefix_[p]: targets of v_0..v_{p-1}
  std::vector<BitVector> suffix_;  // suffix_[p]: sources of v_p..v_k
  BitVector candidates_;
};

std::vector<SimplexId> rank_rows(const SimplexIndex& cofaces_index, const FiltrationSpec& spec,
                                 const DirectedGraph& g, std::vector<double>& row_filtration,
                                 std::vector<SimplexId>& row_simplex) {
  const std::size_t m = cofaces_index.size();
  std::vector<double> values(m);
  for (SimplexId id = 0; id < m; ++id) values[id] = simplex_value(spec, cofaces_index[id], g);
  row_simplex.resize(m);
  std::iota(row_simplex.begin(), row_simplex.end(), SimplexId{0});
  std::stable_sort(row_simplex.begin(), row_simplex.end(),
                   [&](SimplexId a, SimplexId b) { return values[a] > values[b]; });
  std::vector<SimplexId> row_of(m);
  row_filtration.resize(m);
  for (SimplexId r = 0; r < m; ++r) {
    row_of[row_simplex[r]] = r;
    row_filtration[r] = values[row_simplex[r]];
  }
  return row_of;
}

SimplexId lookup(const SimplexIndex& index, SimplexView s) {
  const auto id = index.find(s);
  if (!id) throw std::logic_error("coface missing from simplex index");
  return *id;
}

CoboundaryMatrix make_shell(const SimplexIndex& faces, const SimplexIndex& cofaces_index, const DirectedGraph& g,
                            const FiltrationSpec& spec, std::vector<SimplexId>& row_of) {
  CoboundaryMatrix m;
  m.dimension = faces.dimension();
  row_of = rank_rows(cofaces_index, spec, g, m.row_filtration, m.row_simplex);
  m.columns.resize(faces.size());
  return m;
}

}  // namespace

std::vector<Coface> cofaces(const DirectedGraph& g, SimplexView s) {
  std::vector<Coface> out;
  for (std::size_t p = 0; p <= s.size(); ++p) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < p; ++i) rows.push_back(g.out_row(s[i]));
    for (std::size_t i = p; i < s.size(); ++i) rows.push_back(g.in_row(s[i]));
    intersect_all(rows).for_each_set([&](std::size_t w) {
      Simplex t(s.begin(), s.end());
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(p), static_cast<VertexId>(w));
      out.push_back({p, std::move(t)});
    });
  }
  return out;
}

PivotStats pivot_stats(const SparseColumn& column) {
  const auto& e = column.entries;
  if (e.empty()) return {0, -1, 0};
  const auto pivot = static_cast<std::int64_t>(e.back().row);
  if (e.size() == 1) return {1, pivot, pivot + 1};
  return {e.size(), pivot, pivot - static_cast<std::int64_t>(e[e.size() - 2].row)};
}

std::vector<SimplexId> sort_columns(const CoboundaryMatrix& m) {
  struct Key {
    double filtration;
    std::size_t nnz;
    std::int64_t pivot, gap;
  };
  std::vector<Key> keys(m.columns.size());
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    const auto stats = pivot_stats(m.columns[c]);
    keys[c] = {m.columns[c].filtration, stats.nnz, stats.pivot, stats.gap};
  }
  std::vector<SimplexId> order(m.columns.size());
  std::iota(order.begin(), order.end(), SimplexId{0});
  std::sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) {
    const auto& x = keys[a];
    const auto& y = keys[b];
    return std::tuple(-x.filtration, x.nnz, -x.pivot, -x.gap, a) < std::tuple(-y.filtration, y.nnz, -y.pivot, -y.gap, b);
  });
  return order;
}

CoboundaryMatrix build_matrix(const SimplexIndex& faces, const SimplexIndex& cofaces_index, const DirectedGraph& g,
                              const FiltrationSpec& spec, const PrimeField& field, int threads) {
  std::vector<SimplexId> row_of;
  CoboundaryMatrix m = make_shell(faces, cofaces_index, g, spec, row_of);
  const auto count = static_cast<std::int64_t>(faces.size());

  // Ids follow initial vertices, so contiguous chunks keep one initial vertex per thread.
#pragma omp parallel num_threads(threads)
  {
    CofaceScanner scanner(g);
    Simplex coface;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t c = 0; c < count; ++c) {
      const SimplexView s = faces[static_cast<SimplexId>(c)];
      auto& column = m.columns[c];
      column.simplex_id = static_cast<SimplexId>(c);
      column.filtration = simplex_value(spec, s, g);
      scanner.scan(s, [&](std::size_t p, VertexId w) {
        coface.assign(s.begin(), s.end());
        coface.insert(coface.begin() + static_cast<std::ptrdiff_t>(p), w);
        const auto id = cofaces_index.find(SimplexView(coface.data(), coface.size()));
        // A missing coface leaves a sentinel; reported after the parallel region.
        column.entries.push_back({id ? row_of[*id] : ~SimplexId{0}, field.sign(p)});
      });
      std::sort(column.entries.begin(), column.entries.end(),
                [](const ColumnEntry& a, const ColumnEntry& b) { return a.row < b.row; });
    }
  }
  for (const auto& column : m.columns)
    if (!column.entries.empty() && column.entries.back().row == ~SimplexId{0})
      throw std::logic_error("coface missing from simplex index");
  m.order = sort_columns(m);
  return m;
}

CoboundaryMatrix build_matrix(const ComplexStore& store, const DirectedGraph& g, std::size_t k,
                              const FiltrationSpec& spec, const PrimeField& field, int threads) {
  return build_matrix(store.dimension(k), store.dimension(k + 1), g, spec, field, threads);
}

CoboundaryMatrix build_matrix_serial(const SimplexIndex& faces, const SimplexIndex& cofaces_index,
                                     const DirectedGraph& g, const FiltrationSpec& spec, const PrimeField& field) {
  std::vector<SimplexId> row_of;
  CoboundaryMatrix m = make_shell(faces, cofaces_index, g, spec, row_of);
  for (SimplexId c = 0; c < faces.size(); ++c) {
    auto& column = m.columns[c];
    column.simplex_id = c;
    column.filtration = simplex_value(spec, faces[c], g);
    for (const auto& [p, t] : cofaces(g, faces[c]))
      column.entries.push_back({row_of[lookup(cofaces_index, SimplexView(t.data(), t.size()))], field.sign(p)});
    std::sort(column.entries.begin(), column.entries.end(),
              [](const ColumnEntry& a, const ColumnEntry& b) { return a.row < b.row; });
  }
  m.order = sort_columns(m);
  return m;
}

}  // namespace dflag
