#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "dflag/bit_vector.hpp"
#include "dflag/errors.hpp"
#include "dflag/graph_io.hpp"
#include "random_graphs.hpp"

using namespace dflag;

namespace {

// Character i of the string is bit i.
BitVector bits(const std::string& s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '1') v.set(i);
  return v;
}

DirectedGraph flag(const std::string& text) {
  std::istringstream in(text);
  return load_flag_file(in);
}

DirectedGraph edge_list(const std::string& text, bool directed) {
  std::istringstream in(text);
  return load_edge_list(in, directed);
}

ParseError::Kind flag_error(const std::string& text) {
  try {
    flag(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseError::Kind::Malformed;
}

}  // namespace

TEST_CASE("intersect_all") {
  const BitVector a = bits("1101");
  const BitVector b = bits("0111");
  const std::vector<BitVector> rows{a, b};
  CHECK(intersect_all(rows) == bits("0101"));

  const std::vector<BitVector> single{a};
  CHECK(intersect_all(single) == a);

  const BitVector x = bits("1011001110101");
  const std::vector<BitVector> with_complement{x, x.complement()};
  CHECK(intersect_all(with_complement).none());
  CHECK(x.complement().popcount() + x.popcount() == x.length());

  const std::vector<BitVector> mismatched{bits("101"), bits("1010")};
  CHECK_THROWS_AS(intersect_all(mismatched), std::invalid_argument);
  CHECK_THROWS_AS(intersect_all({}), std::invalid_argument);
}

TEST_CASE("intersect_all does not depend on the order of its inputs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t length = 1 + rng() % 200;
    std::vector<BitVector> rows(2 + rng() % 4, BitVector(length));
    for (auto& row : rows)
      for (std::size_t i = 0; i < length; ++i)
        if (rng() % 4 != 0) row.set(i);
    const BitVector expected = intersect_all(rows);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(intersect_all(rows) == expected);
    for (std::size_t i = 0; i < length; ++i) {
      const bool all = std::all_of(rows.begin(), rows.end(), [&](const BitVector& r) { return r.test(i); });
      CHECK(expected.test(i) == all);
    }
  }
}

TEST_CASE("load_flag_file") {
  SUBCASE("directed 3-clique") {
    const auto g = flag("dim 0\n0 0 0\ndim 1\n0 1\n1 2\n0 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(g.has_edge_weights());
  }
  SUBCASE("reciprocal weighted pair") {
    const auto g = flag("dim 0\n0 0\ndim 1\n0 1 0.5\n1 0 0.7");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.edge_weight(0, 1) == 0.5);
    CHECK(g.edge_weight(1, 0) == 0.7);
  }
  SUBCASE("fixture file") {
    const auto g = load_flag_file(std::string(DFLAG_TEST_DATA_DIR) + "/apparent_pairs.flag");
    std::vector<std::size_t> degrees;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.out_degree(v));
    CHECK(degrees == std::vector<std::size_t>{1, 3, 1, 1, 2});
    CHECK(g.has_vertex_weights());
    CHECK(g.edges() == testing::apparent_pairs_graph().edges());
  }
  SUBCASE("comments, blank lines and CRLF") {
    const auto g = flag("# header\r\ndim 0\r\n1.5 2   # values\r\n\r\ndim 1\r\n1 0 3\r\n");
    CHECK(g.vertex_weight(0) == 1.5);
    CHECK(g.edge_weight(1, 0) == 3.0);
  }
  SUBCASE("no vertices") {
    const auto g = flag("dim 0\n");
    CHECK(g.vertex_count() == 0);
  }
}

TEST_CASE("load_flag_file errors") {
  CHECK(flag_error("dim 1\n0 1") == ParseError::Kind::Malformed);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n0") == ParseError::Kind::Malformed);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n0 x") == ParseError::Kind::Malformed);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n0 1 2 3") == ParseError::Kind::Malformed);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n0 2") == ParseError::Kind::VertexOutOfRange);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n0 1\n0 1") == ParseError::Kind::DuplicateEdge);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n1 1") == ParseError::Kind::Loop);
  CHECK(flag_error("dim 0\n0 nan\ndim 1\n") == ParseError::Kind::BadWeight);
  CHECK(flag_error("dim 0\n0 0\ndim 1\n0 1 inf") == ParseError::Kind::BadWeight);
  CHECK(flag_error("dim 0\n0 0 0\ndim 1\n0 1 1\n1 2") == ParseError::Kind::Malformed);

  try {
    flag("dim 0\n0 0\n# comment\ndim 1\n0 1\n1 5\n");
    FAIL("expected a range error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("load_edge_list") {
  const auto directed = edge_list("0 1\n1 0", true);
  CHECK(directed.vertex_count() == 2);
  CHECK(directed.edge_count() == 2);

  const auto undirected = edge_list("0 1\n1 0", false);
  CHECK(undirected.vertex_count() == 2);
  CHECK(undirected.edges() == std::vector<Edge>{{0, 1}});

  const auto compacted = edge_list("7 9\n9 12", true);
  CHECK(compacted.vertex_count() == 3);
  CHECK(compacted.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const auto oriented = edge_list("# weighted\n5 2 0.25\n2 9 1\n", false);
  CHECK(oriented.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(oriented.edge_weight(0, 1) == 0.25);

  CHECK_THROWS_AS(edge_list("0 1\n0 1", true), ParseError);
  CHECK_THROWS_AS(edge_list("0 1\n0 1", false), ParseError);
  CHECK_THROWS_AS(edge_list("0 1 1\n1 0 2", false), ParseError);
  CHECK_THROWS_AS(edge_list("3 3", true), ParseError);
  CHECK_THROWS_AS(edge_list("0 -1", true), ParseError);
}

TEST_CASE("adjacency rows and their transpose agree") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = testing::erdos_renyi(1 + seed % 70, 0.15, seed);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      CHECK_FALSE(g.has_edge(v, v));
      for (VertexId w = 0; w < g.vertex_count(); ++w) CHECK(g.out_row(v).test(w) == g.in_row(w).test(v));
    }
  }
}

TEST_CASE("writing and reloading a flag file gives the same graph") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = testing::erdos_renyi(seed % 20, 0.3, seed, seed % 2 == 0 ? std::optional<int>(10) : std::nullopt);
    std::vector<double> values;
    for (VertexId v = 0; v < g.vertex_count(); ++v) values.push_back(0.125 * v);
    std::vector<WeightedEdge> edges;
    for (const auto e : g.edges())
      edges.push_back({e, g.has_edge_weights() ? std::optional<double>(g.edge_weight(e.source, e.target) / 3.0)
                                               : std::nullopt});
    const DirectedGraph weighted(g.vertex_count(), edges, values);
    std::stringstream text;
    write_flag_file(text, weighted);
    CHECK(load_flag_file(text) == weighted);
  }
}

TEST_CASE("orient_undirected") {
  const auto g = flag("dim 0\n0 0 0\ndim 1\n0 1 2\n1 0 2\n2 1 5");
  const auto u = orient_undirected(g);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(u.edge_weight(1, 2) == 5.0);
  CHECK_THROWS_AS(orient_undirected(flag("dim 0\n0 0\ndim 1\n0 1 2\n1 0 3")), std::invalid_argument);
}

TEST_CASE("graph construction rejects invalid input") {
  const std::vector<WeightedEdge> loop{{{1, 1}, std::nullopt}};
  CHECK_THROWS_AS(DirectedGraph(2, loop), std::invalid_argument);
  const std::vector<WeightedEdge> out_of_range{{{0, 2}, std::nullopt}};
  CHECK_THROWS_AS(DirectedGraph(2, out_of_range), std::invalid_argument);
  const std::vector<WeightedEdge> partial{{{0, 1}, 1.0}, {{1, 0}, std::nullopt}};
  CHECK_THROWS_AS(DirectedGraph(2, partial), std::invalid_argument);
}
