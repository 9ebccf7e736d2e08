#include "dflag/complex_store.hpp"

#include <omp.h>

namespace dflag {

const SimplexIndex& ComplexStore::dimension(std::size_t d) const {
  return d < dims_.size() ? dims_[d] : past_top_;
}

std::vector<std::uint64_t> ComplexStore::counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& dim : dims_) out.push_back(dim.size());
  return out;
}

ComplexStore build_store(const DirectedGraph& g, std::size_t max_dim, int threads) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  // per_vertex[v][d] holds the d-simplices with initial vertex v, flattened.
  std::vector<std::vector<std::vector<VertexId>>> per_vertex(g.vertex_count());

#pragma omp parallel num_threads(threads)
  {
    SimplexWalker walker(g, max_dim);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      auto& buckets = per_vertex[i];
      walker.walk(static_cast<VertexId>(i), [&](SimplexView s) {
        const auto d = dimension_of(s);
        if (buckets.size() <= d) buckets.resize(d + 1);
        buckets[d].insert(buckets[d].end(), s.begin(), s.end());
        return Visit::Continue;
      });
    }
  }

  std::size_t top = 0;
  for (const auto& buckets : per_vertex) top = std::max(top, buckets.size());
  std::vector<SimplexIndex> dims;
  dims.reserve(top);
  for (std::size_t d = 0; d < top; ++d) {
    std::vector<VertexId> flat;
    for (auto& buckets : per_vertex) {
      if (d < buckets.size()) {
        flat.insert(flat.end(), buckets[d].begin(), buckets[d].end());
        std::vector<VertexId>().swap(buckets[d]);
      }
    }
    dims.emplace_back(d, std::move(flat));
  }
  return ComplexStore(std::move(dims));
}

SimplexIndex build_dimension_index(const DirectedGraph& g, std::size_t d, int threads) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<std::vector<VertexId>> per_vertex(g.vertex_count());

#pragma omp parallel num_threads(threads)
  {
    SimplexWalker walker(g, d);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      auto& bucket = per_vertex[i];
      walker.walk(static_cast<VertexId>(i), [&](SimplexView s) {
        if (dimension_of(s) == d) bucket.insert(bucket.end(), s.begin(), s.end());
        return Visit::Continue;
      });
    }
  }

  std::vector<VertexId> flat;
  for (auto& bucket : per_vertex) {
    flat.insert(flat.end(), bucket.begin(), bucket.end());
    std::vector<VertexId>().swap(bucket);
  }
  return SimplexIndex(d, std::move(flat));
}

}  // namespace dflag
