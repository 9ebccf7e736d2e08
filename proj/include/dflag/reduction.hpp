#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dflag/coboundary.hpp"
#include "dflag/field.hpp"
#include "dflag/filtration.hpp"
#include "dflag/graph.hpp"

namespace dflag {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr SimplexId kNoColumn = std::numeric_limits<SimplexId>::max();

struct ReduceOptions {
  /// A column is abandoned once it reaches this many column additions.
  std::optional<std::uint64_t> approx_limit;
  std::size_t hash_threshold = 1024;
};

struct RawPair {
  SimplexId column;  // k-simplex id
  SimplexId row;     // pivot row of the reduced column
  double birth;      // filtration of the column
  double death;      // filtration of the pivot row
};

struct ReductionResult {
  std::vector<SimplexId> pivot_column;  // row -> column owning it as pivot, or kNoColumn
  std::vector<RawPair> pairs;
  std::uint64_t skipped = 0;
  std::uint64_t additions = 0;

  std::uint64_t rank() const noexcept { return pairs.size(); }
};

/// Left-to-right reduction over F_q in m.order. Throws std::invalid_argument if
/// m.order is not a valid reduction order.
ReductionResult reduce(const CoboundaryMatrix& m, const PrimeField& field, const ReduceOptions& options = {});

struct PersistenceInterval {
  double birth;
  double death;  // kInfinity for essential classes
  friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
  friend auto operator<=>(const PersistenceInterval&, const PersistenceInterval&) = default;
};

struct DimensionReport {
  std::size_t dimension = 0;
  std::uint64_t cells = 0;
  std::uint64_t betti = 0;
  std::uint64_t skipped = 0;      // columns abandoned in delta_k
  std::uint64_t error_bound = 0;  // skipped(delta_{k-1}) + skipped(delta_k)
  std::vector<PersistenceInterval> barcode;  // sorted; empty unless requested
  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

struct HomologyReport {
  std::vector<DimensionReport> dimensions;
  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

struct HomologyOptions {
  std::size_t min_dim = 0;
  std::size_t max_dim = kUnboundedDim;
  std::uint32_t modulus = 2;
  std::optional<std::uint64_t> approx_limit;
  std::size_t hash_threshold = 1024;
  int threads = 1;
  bool in_memory = false;       // keep the whole complex instead of two dimensions at a time
  bool skip_zero_bars = true;
};

/// Betti numbers with skipped-column accounting for dimensions min_dim..max_dim
/// (clamped to the top dimension of the complex). Throws ConfigError for an
/// invalid modulus, missing weights or a non-monotone filtration.
HomologyReport compute_homology(const DirectedGraph& g, const FiltrationSpec& spec, const HomologyOptions& options);

/// As compute_homology, and fills each dimension's barcode.
HomologyReport compute_persistence(const DirectedGraph& g, const FiltrationSpec& spec, const HomologyOptions& options);

}  // namespace dflag
