#include "dflag/reduction.hpp"

#include <algorithm>
#include <iterator>

#include "dflag/complex_store.hpp"
#include "dflag/errors.hpp"

namespace dflag {
namespace {

/// Hands out the simplices of one dimension at a time, either from a full
/// in-memory store or by re-enumerating and keeping only the last two dimensions.
class DimensionSource {
 public:
  DimensionSource(const DirectedGraph& g, std::size_t top, bool in_memory, int threads) : g_(g), threads_(threads) {
    if (in_memory) store_ = build_store(g, top, threads);
  }

  /// References stay valid until two further dimensions have been requested.
  const SimplexIndex& get(std::size_t d) {
    if (store_) return store_->dimension(d);
    for (auto& slot : slots_)
      if (slot.dim == d) return slot.index;
    auto& oldest = slots_[0].dim == kNone || (slots_[1].dim != kNone && slots_[0].dim < slots_[1].dim) ? slots_[0]
                                                                                                       : slots_[1];
    oldest.index = build_dimension_index(g_, d, threads_);
    oldest.dim = d;
    return oldest.index;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Slot {
    std::size_t dim = kNone;
    SimplexIndex index;
  };

  const DirectedGraph& g_;
  int threads_;
  std::optional<ComplexStore> store_;
  Slot slots_[2];
};

std::vector<double> multiset_minus(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<double> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

HomologyReport run(const DirectedGraph& g, const FiltrationSpec& spec, const HomologyOptions& options, bool barcode) {
  const PrimeField field(options.modulus);
  validate(spec, g);
  const std::size_t top = options.max_dim == kUnboundedDim ? kUnboundedDim : options.max_dim + 1;
  if (spec.algorithm != FiltrationAlgorithm::Zero && !check_monotone(spec, g, top))
    throw ConfigError("filtration is not monotone: some face has a larger value than its coface");

  DimensionSource source(g, top, options.in_memory, options.threads);
  const ReduceOptions reduce_options{options.approx_limit, options.hash_threshold};

  HomologyReport report;
  std::uint64_t prev_rank = 0;
  std::uint64_t prev_skipped = 0;
  std::vector<double> prev_pivot_rows;  // filtration of k-simplices that are pivots of delta_{k-1}

  for (std::size_t k = options.min_dim == 0 ? 0 : options.min_dim - 1; k <= options.max_dim; ++k) {
    const SimplexIndex& faces = source.get(k);
    if (faces.empty()) break;
    const SimplexIndex& cofaces_index = source.get(k + 1);
    const CoboundaryMatrix m = build_matrix(faces, cofaces_index, g, spec, field, options.threads);
    const ReductionResult r = reduce(m, field, reduce_options);

    if (k >= options.min_dim) {
      DimensionReport dim;
      dim.dimension = k;
      dim.cells = faces.size();
      dim.betti = dim.cells - r.rank() - prev_rank;
      dim.skipped = r.skipped;
      dim.error_bound = prev_skipped + r.skipped;
      if (barcode) {
        for (const auto& p : r.pairs)
          if (!(options.skip_zero_bars && p.birth == p.death)) dim.barcode.push_back({p.birth, p.death});
        std::vector<double> cells, paired;
        cells.reserve(m.columns.size());
        for (const auto& column : m.columns) cells.push_back(column.filtration);
        for (const auto& p : r.pairs) paired.push_back(p.birth);
        for (double birth : multiset_minus(multiset_minus(std::move(cells), std::move(paired)), prev_pivot_rows))
          dim.barcode.push_back({birth, kInfinity});
        std::sort(dim.barcode.begin(), dim.barcode.end());
      }
      report.dimensions.push_back(std::move(dim));
    }

    prev_rank = r.rank();
    prev_skipped = r.skipped;
    prev_pivot_rows.clear();
    for (const auto& p : r.pairs) prev_pivot_rows.push_back(p.death);
  }
  return report;
}

}  // namespace

HomologyReport compute_homology(const DirectedGraph& g, const FiltrationSpec& spec, const HomologyOptions& options) {
  return run(g, spec, options, false);
}

HomologyReport compute_persistence(const DirectedGraph& g, const FiltrationSpec& spec,
                                   const HomologyOptions& options) {
  return run(g, spec, options, true);
}

}  // namespace dflag
