#include "dflag/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dflag {

DirectedGraph::DirectedGraph(std::size_t vertex_count, std::span<const WeightedEdge> edges,
                             std::optional<std::vector<double>> vertex_weights)
    : out_rows_(vertex_count, BitVector(vertex_count)),
      in_rows_(vertex_count, BitVector(vertex_count)),
      vertex_weights_(std::move(vertex_weights)) {
  if (vertex_weights_) {
    if (vertex_weights_->size() != vertex_count)
      throw std::invalid_argument("vertex weight count does not match vertex count");
    for (double w : *vertex_weights_)
      if (!std::isfinite(w)) throw std::invalid_argument("non-finite vertex weight");
  }

  std::size_t weighted = 0;
  for (const auto& e : edges) weighted += e.weight.has_value() ? 1 : 0;
  if (weighted != 0 && weighted != edges.size())
    throw std::invalid_argument("either every edge or no edge must carry a weight");
  if (weighted != 0) edge_weights_.emplace();

  for (const auto& [edge, weight] : edges) {
    const auto [from, to] = edge;
    if (from >= vertex_count || to >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(from) + " " + std::to_string(to));
    if (from == to) throw std::invalid_argument("loop at vertex " + std::to_string(from));
    if (out_rows_[from].test(to))
      throw std::invalid_argument("duplicate edge " + std::to_string(from) + " " + std::to_string(to));
    out_rows_[from].set(to);
    in_rows_[to].set(from);
    ++edge_count_;
    if (weight) {
      if (!std::isfinite(*weight)) throw std::invalid_argument("non-finite edge weight");
      edge_weights_->emplace(key(from, to), *weight);
    }
  }
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < out_rows_.size(); ++v)
    out_rows_[v].for_each_set([&](std::size_t w) { out.push_back({v, static_cast<VertexId>(w)}); });
  return out;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  return a.out_rows_ == b.out_rows_ && a.in_rows_ == b.in_rows_ && a.vertex_weights_ == b.vertex_weights_ &&
         a.edge_weights_ == b.edge_weights_;
}

}  // namespace dflag
