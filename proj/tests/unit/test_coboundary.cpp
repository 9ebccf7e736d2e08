#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "dflag/coboundary.hpp"
#include "dflag/complex_store.hpp"
#include "dflag/oracle.hpp"
#include "random_graphs.hpp"

using namespace dflag;
using Tuple = std::vector<VertexId>;

namespace {

Tuple tuple(const Simplex& s) { return Tuple(s.begin(), s.end()); }

/// Dense delta_k with rows indexed by (k+1)-simplex id, columns by k-simplex id.
oracle::DenseMatrix to_dense(const CoboundaryMatrix& m, std::uint32_t q) {
  oracle::DenseMatrix d(m.row_count(), m.columns.size(), q);
  for (const auto& column : m.columns)
    for (const auto& e : column.entries) d.set(m.row_simplex[e.row], column.simplex_id, e.coeff);
  return d;
}

std::vector<Tuple> listing(const SimplexIndex& index) {
  std::vector<Tuple> out;
  for (SimplexId id = 0; id < index.size(); ++id) out.emplace_back(index[id].begin(), index[id].end());
  return out;
}

SparseColumn column(SimplexId id, double filtration, std::vector<SimplexId> rows) {
  SparseColumn c{id, filtration, {}};
  for (auto r : rows) c.entries.push_back({r, 1});
  return c;
}

std::vector<SimplexId> order_of(std::vector<SparseColumn> columns) {
  CoboundaryMatrix m;
  m.columns = std::move(columns);
  return sort_columns(m);
}

}  // namespace

TEST_CASE("cofaces by vertex insertion") {
  const auto clique = testing::three_clique();
  const Tuple e01{0, 1}, e02{0, 2};
  auto c = cofaces(clique, e01);
  REQUIRE(c.size() == 1);
  CHECK(c[0].position == 2);
  CHECK(tuple(c[0].simplex) == Tuple{0, 1, 2});
  c = cofaces(clique, e02);
  REQUIRE(c.size() == 1);
  CHECK(c[0].position == 1);

  const Tuple e23{2, 3};
  c = cofaces(testing::apparent_pairs_graph(), e23);
  REQUIRE(c.size() == 2);
  CHECK(c[0].position == 0);
  CHECK(tuple(c[0].simplex) == Tuple{1, 2, 3});
  CHECK(c[1].position == 0);
  CHECK(tuple(c[1].simplex) == Tuple{4, 2, 3});
}

TEST_CASE("cofaces match the brute-force face relation") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = testing::erdos_renyi(6 + seed % 15, 0.1 + 0.1 * static_cast<double>(seed % 4), seed);
    const auto levels = oracle::enumerate(g);
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      std::multiset<std::pair<Tuple, Tuple>> expected, produced;
      for (const auto& t : levels[k + 1])
        for (std::size_t i = 0; i < t.size(); ++i) {
          Tuple face = t;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          expected.emplace(face, t);
        }
      for (const auto& s : levels[k])
        for (const auto& [p, t] : cofaces(g, s)) {
          Tuple back = tuple(t);
          back.erase(back.begin() + static_cast<std::ptrdiff_t>(p));
          CHECK(back == s);
          produced.emplace(s, tuple(t));
        }
      CHECK(produced == expected);
    }
  }
}

TEST_CASE("build_matrix on small complexes") {
  const auto store = build_store(testing::three_clique());
  const auto m2 = build_matrix(store, testing::three_clique(), 1, {}, PrimeField(2));
  REQUIRE(m2.columns.size() == 3);
  for (const auto& c : m2.columns) CHECK(c.entries == std::vector<ColumnEntry>{{0, 1}});

  const auto m3 = build_matrix(store, testing::three_clique(), 1, {}, PrimeField(3));
  // Column ids follow (0,1), (0,2), (1,2); d(0,1,2) = (1,2) - (0,2) + (0,1).
  CHECK(m3.columns[0].entries == std::vector<ColumnEntry>{{0, 1}});
  CHECK(m3.columns[1].entries == std::vector<ColumnEntry>{{0, 2}});
  CHECK(m3.columns[2].entries == std::vector<ColumnEntry>{{0, 1}});

  const auto pair = testing::from_edges(2, {{0, 1}, {1, 0}});
  const auto m_pair = build_matrix(build_store(pair), pair, 1, {}, PrimeField(2));
  REQUIRE(m_pair.columns.size() == 2);
  CHECK(m_pair.columns[0].entries.empty());
  CHECK(m_pair.columns[1].entries.empty());

  const SimplexIndex no_cofaces(2);
  CHECK_THROWS_AS(build_matrix(store.dimension(1), no_cofaces, testing::three_clique(), {}, PrimeField(2)),
                  std::logic_error);
}

TEST_CASE("coboundary is the signed transpose of the boundary and squares to zero") {
  for (std::uint32_t q : {2U, 3U, 5U}) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto g = testing::erdos_renyi(5 + seed % 11, 0.2 + 0.05 * static_cast<double>(seed % 5), seed, 10);
      const auto store = build_store(g);
      const PrimeField field(q);
      const FiltrationSpec spec{seed % 2 == 0 ? FiltrationAlgorithm::Zero : FiltrationAlgorithm::EdgeMax};
      std::vector<oracle::DenseMatrix> deltas;
      for (std::size_t k = 0; k + 1 < store.dimension_count(); ++k) {
        const auto m = build_matrix(store, g, k, spec, field);
        const auto dense = to_dense(m, q);
        const auto boundary =
            oracle::boundary_matrix(listing(store.dimension(k + 1)), listing(store.dimension(k)), q);
        CHECK(dense == boundary.transpose());
        deltas.push_back(dense);
      }
      for (std::size_t k = 0; k + 1 < deltas.size(); ++k) CHECK((deltas[k + 1] * deltas[k]).is_zero());
    }
  }
}

TEST_CASE("sort_columns heuristic") {
  // Fewest nonzeros first.
  CHECK(order_of({column(0, 0, {1, 2, 3}), column(1, 0, {4}), column(2, 0, {5, 6})}).front() == 1);
  // Equal nonzeros: larger pivot first.
  CHECK(order_of({column(0, 0, {4}), column(1, 0, {9})}) == std::vector<SimplexId>{1, 0});
  // Empty columns lead their filtration group.
  CHECK(order_of({column(0, 0, {3}), column(1, 0, {}), column(2, 0, {1, 2})}) == std::vector<SimplexId>{1, 0, 2});
  // Equal pivots: larger gap first; a single entry counts as the largest gap.
  CHECK(order_of({column(0, 0, {6, 8}), column(1, 0, {2, 8})}) == std::vector<SimplexId>{1, 0});
  CHECK(pivot_stats(column(0, 0, {8})).gap == 9);
  CHECK(pivot_stats(column(0, 0, {})).gap == 0);
  // Full ties fall back to the simplex id.
  CHECK(order_of({column(0, 0, {1, 5}), column(1, 0, {1, 5})}) == std::vector<SimplexId>{0, 1});
  // Filtration dominates, later values first.
  CHECK(order_of({column(0, 1.0, {}), column(1, 2.0, {1, 2, 3}), column(2, 1.0, {7})}) ==
        std::vector<SimplexId>{1, 0, 2});
}

TEST_CASE("column order is a permutation following the filtration") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = testing::erdos_renyi(15, 0.3, seed, 10);
    const auto store = build_store(g);
    for (std::size_t k = 0; k < store.dimension_count(); ++k) {
      const auto m = build_matrix(store, g, k, {FiltrationAlgorithm::EdgeMax}, PrimeField(2));
      auto sorted = m.order;
      std::sort(sorted.begin(), sorted.end());
      for (SimplexId i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
      for (std::size_t i = 1; i < m.order.size(); ++i)
        CHECK(m.columns[m.order[i - 1]].filtration >= m.columns[m.order[i]].filtration);
      for (std::size_t r = 1; r < m.row_count(); ++r) CHECK(m.row_filtration[r - 1] >= m.row_filtration[r]);
    }
  }
}

TEST_CASE("parallel matrix construction matches the serial reference") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = testing::erdos_renyi(70, 0.12, seed, 10);
    const auto store = build_store(g);
    const PrimeField field(3);
    for (std::size_t k = 0; k < store.dimension_count(); ++k) {
      const auto serial = build_matrix_serial(store.dimension(k), store.dimension(k + 1), g,
                                              {FiltrationAlgorithm::EdgeMax}, field);
      for (int threads : {1, 2, 8}) {
        const auto parallel = build_matrix(store, g, k, {FiltrationAlgorithm::EdgeMax}, field, threads);
        CHECK(parallel.order == serial.order);
        CHECK(parallel.row_simplex == serial.row_simplex);
        REQUIRE(parallel.columns.size() == serial.columns.size());
        for (std::size_t c = 0; c < serial.columns.size(); ++c)
          CHECK(parallel.columns[c].entries == serial.columns[c].entries);
      }
    }
  }
}
