#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dflag/bit_vector.hpp"

namespace dflag {

using VertexId = std::uint32_t;

struct Edge {
  VertexId source;
  VertexId target;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  Edge edge;
  std::optional<double> weight;
};

/// Loop-free directed graph stored as a bitset adjacency matrix and its transpose.
/// Immutable after construction; safe to share across threads.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Throws std::invalid_argument on loops, duplicate edges, out-of-range ids,
  /// non-finite weights or a partially weighted edge set.
  DirectedGraph(std::size_t vertex_count, std::span<const WeightedEdge> edges,
                std::optional<std::vector<double>> vertex_weights = std::nullopt);

  std::size_t vertex_count() const noexcept { return out_rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(VertexId from, VertexId to) const noexcept { return out_rows_[from].test(to); }
  const BitVector& out_row(VertexId v) const noexcept { return out_rows_[v]; }
  const BitVector& in_row(VertexId v) const noexcept { return in_rows_[v]; }
  std::size_t out_degree(VertexId v) const noexcept { return out_rows_[v].popcount(); }

  /// All edges in (source, target) lexicographic order.
  std::vector<Edge> edges() const;

  bool has_vertex_weights() const noexcept { return vertex_weights_.has_value(); }
  bool has_edge_weights() const noexcept { return edge_weights_.has_value(); }
  double vertex_weight(VertexId v) const { return vertex_weights_->at(v); }
  double edge_weight(VertexId from, VertexId to) const { return edge_weights_->at(key(from, to)); }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  static std::uint64_t key(VertexId from, VertexId to) noexcept {
    return (std::uint64_t{from} << 32) | std::uint64_t{to};
  }

  std::vector<BitVector> out_rows_;
  std::vector<BitVector> in_rows_;
  std::size_t edge_count_ = 0;
  std::optional<std::vector<double>> vertex_weights_;
  std::optional<std::unordered_map<std::uint64_t, double>> edge_weights_;
};

}  // namespace dflag
