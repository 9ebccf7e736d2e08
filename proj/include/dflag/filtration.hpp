#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "dflag/enumerate.hpp"
#include "dflag/graph.hpp"
#include "dflag/simplex.hpp"

namespace dflag {

enum class FiltrationAlgorithm {
  Zero,       // every simplex at 0
  VertexMax,  // max vertex weight
  EdgeMax,    // max edge weight; vertices take their weight if present, else 0
  Max,        // max over all vertex and edge weights present
};

std::optional<FiltrationAlgorithm> parse_filtration_algorithm(std::string_view name);
std::string_view to_string(FiltrationAlgorithm algorithm);

struct FiltrationSpec {
  FiltrationAlgorithm algorithm = FiltrationAlgorithm::Zero;
};

/// Throws ConfigError if g lacks the weights the algorithm reads.
void validate(const FiltrationSpec& spec, const DirectedGraph& g);

double simplex_value(const FiltrationSpec& spec, SimplexView s, const DirectedGraph& g);

using FilterFunction = std::function<double(SimplexView)>;

/// True iff f(face) <= f(simplex) for every simplex of dimension <= max_dim and
/// each of its codimension-1 faces.
bool check_monotone(const FilterFunction& f, const DirectedGraph& g, std::size_t max_dim = kUnboundedDim);
bool check_monotone(const FiltrationSpec& spec, const DirectedGraph& g, std::size_t max_dim = kUnboundedDim);

}  // namespace dflag
