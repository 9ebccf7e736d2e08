#include "dflag/filtration.hpp"

#include <algorithm>

#include "dflag/errors.hpp"

namespace dflag {
namespace {

double max_vertex_weight(SimplexView s, const DirectedGraph& g) {
  double value = g.vertex_weight(s.front());
  for (VertexId v : s.subspan(1)) value = std::max(value, g.vertex_weight(v));
  return value;
}

double max_edge_weight(SimplexView s, const DirectedGraph& g) {
  double value = g.edge_weight(s[0], s[1]);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) value = std::max(value, g.edge_weight(s[i], s[j]));
  return value;
}

}  // namespace

std::optional<FiltrationAlgorithm> parse_filtration_algorithm(std::string_view name) {
  if (name == "zero") return FiltrationAlgorithm::Zero;
  if (name == "vertex-max") return FiltrationAlgorithm::VertexMax;
  if (name == "edge-max") return FiltrationAlgorithm::EdgeMax;
  if (name == "max") return FiltrationAlgorithm::Max;
  return std::nullopt;
}

std::string_view to_string(FiltrationAlgorithm algorithm) {
  switch (algorithm) {
    case FiltrationAlgorithm::Zero: return "zero";
    case FiltrationAlgorithm::VertexMax: return "vertex-max";
    case FiltrationAlgorithm::EdgeMax: return "edge-max";
    case FiltrationAlgorithm::Max: return "max";
  }
  return "?";
}

void validate(const FiltrationSpec& spec, const DirectedGraph& g) {
  switch (spec.algorithm) {
    case FiltrationAlgorithm::Zero: return;
    case FiltrationAlgorithm::VertexMax:
      if (!g.has_vertex_weights()) throw ConfigError("filtration 'vertex-max' needs vertex weights");
      return;
    case FiltrationAlgorithm::EdgeMax:
      if (!g.has_edge_weights() && g.edge_count() != 0) throw ConfigError("filtration 'edge-max' needs edge weights");
      return;
    case FiltrationAlgorithm::Max:
      if (!g.has_vertex_weights() && !g.has_edge_weights() && g.edge_count() != 0)
        throw ConfigError("filtration 'max' needs vertex or edge weights");
      return;
  }
}

double simplex_value(const FiltrationSpec& spec, SimplexView s, const DirectedGraph& g) {
  switch (spec.algorithm) {
    case FiltrationAlgorithm::Zero: return 0.0;
    case FiltrationAlgorithm::VertexMax: return max_vertex_weight(s, g);
    case FiltrationAlgorithm::EdgeMax:
      if (s.size() == 1) return g.has_vertex_weights() ? g.vertex_weight(s[0]) : 0.0;
      return max_edge_weight(s, g);
    case FiltrationAlgorithm::Max: {
      double value = g.has_vertex_weights() ? max_vertex_weight(s, g) : 0.0;
      if (s.size() > 1 && g.has_edge_weights()) {
        const double edges = max_edge_weight(s, g);
        value = g.has_vertex_weights() ? std::max(value, edges) : edges;
      }
      return value;
    }
  }
  return 0.0;
}

bool check_monotone(const FilterFunction& f, const DirectedGraph& g, std::size_t max_dim) {
  bool monotone = true;
  Simplex face;
  for_each_simplex(g, max_dim, [&](SimplexView s) {
    if (s.size() < 2) return Visit::Continue;
    const double value = f(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      if (f(SimplexView(face.data(), face.size())) > value) {
        monotone = false;
        return Visit::Stop;
      }
    }
    return Visit::Continue;
  });
  return monotone;
}

bool check_monotone(const FiltrationSpec& spec, const DirectedGraph& g, std::size_t max_dim) {
  return check_monotone([&](SimplexView s) { return simplex_value(spec, s, g); }, g, max_dim);
}

}  // namespace dflag
