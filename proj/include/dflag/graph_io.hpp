#pragma once

#include <iosfwd>
#include <string>

#include "dflag/graph.hpp"

namespace dflag {

// Line-oriented `.flag` format:
//
//   dim 0
//   <n whitespace-separated vertex values>
//   dim 1
//   <source> <target> [weight]     (one edge per line)
//
// '#' starts a comment; blank lines are ignored; LF and CRLF are both accepted.
// Vertex values are always kept as vertex weights.

DirectedGraph load_flag_file(std::istream& in);
DirectedGraph load_flag_file(const std::string& path);

/// Writes a graph that load_flag_file reads back unchanged.
void write_flag_file(std::ostream& out, const DirectedGraph& g);

/// Edge list, one "u v [w]" per line with arbitrary non-negative ids, which are
/// compacted to [0, n) in ascending order. With directed == false each pair is
/// stored once, oriented from the lower to the higher compacted id; a pair given
/// in both orientations collapses to one edge when the weights agree.
DirectedGraph load_edge_list(std::istream& in, bool directed);
DirectedGraph load_edge_list(const std::string& path, bool directed);

}  // namespace dflag

namespace dflag {

/// Same vertices, every edge oriented from lower to higher id; a reciprocal pair
/// collapses to one edge. Throws std::invalid_argument if its weights disagree.
DirectedGraph orient_undirected(const DirectedGraph& g);

}  // namespace dflag
