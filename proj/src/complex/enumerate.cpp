#include "dflag/enumerate.hpp"

#include <omp.h>

#include "dflag/count_checkpoint.hpp"

namespace dflag {
namespace {

void accumulate(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t d = 0; d < from.size(); ++d) into[d] += from[d];
}

struct Tally {
  std::vector<std::uint64_t>& counts;
  Visit operator()(SimplexView s) const {
    const auto d = dimension_of(s);
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
    return Visit::Continue;
  }
};

}  // namespace

BitVector extension_set(const DirectedGraph& g, SimplexView s) {
  BitVector out = g.out_row(s.front());
  for (VertexId v : s.subspan(1)) out &= g.out_row(v);
  return out;
}

CellCountReport CellCountReport::from_counts(std::vector<std::uint64_t> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  CellCountReport report;
  for (std::size_t d = 0; d < counts.size(); ++d)
    report.euler_characteristic += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[d]);
  report.counts = std::move(counts);
  return report;
}

CellCountReport count_cells_serial(const DirectedGraph& g, std::size_t max_dim) {
  std::vector<std::uint64_t> counts;
  for_each_simplex(g, max_dim, Tally{counts});
  return CellCountReport::from_counts(std::move(counts));
}

CellCountReport count_cells(const DirectedGraph& g, std::size_t max_dim, int threads, CountCheckpoint* checkpoint) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<std::uint64_t> total;
  std::vector<char> done(g.vertex_count(), 0);
  if (checkpoint != nullptr) {
    for (const auto& [v, counts] : checkpoint->completed()) {
      done.at(v) = 1;
      accumulate(total, counts);
    }
  }

#pragma omp parallel num_threads(threads)
  {
    SimplexWalker walker(g, max_dim);
    std::vector<std::uint64_t> local;
    std::vector<std::uint64_t> per_vertex;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      if (done[i] != 0) continue;
      const auto v = static_cast<VertexId>(i);
      per_vertex.clear();
      walker.walk(v, Tally{per_vertex});
      if (checkpoint != nullptr) checkpoint->record(v, per_vertex);
      accumulate(local, per_vertex);
    }
#pragma omp critical(dflag_count_merge)
    accumulate(total, local);
  }
  return CellCountReport::from_counts(std::move(total));
}

}  // namespace dflag
