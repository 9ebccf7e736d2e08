#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dflag/bit_vector.hpp"
#include "dflag/graph.hpp"
#include "dflag/simplex.hpp"

namespace dflag {

inline constexpr std::size_t kUnboundedDim = std::numeric_limits<std::size_t>::max();

enum class Visit { Continue, Stop };

/// Vertices w such that (v_0, ..., v_k, w) is a simplex.
BitVector extension_set(const DirectedGraph& g, SimplexView s);

/// Depth-first walk of the simplices sharing an initial vertex. Children are
/// visited in ascending vertex order. Working state is one bitset per depth, so
/// a walker is per-thread and reusable across initial vertices.
class SimplexWalker {
 public:
  SimplexWalker(const DirectedGraph& g, std::size_t max_dim, bool prune = true) : g_(g), max_dim_(max_dim), prune_(prune) {}

  /// Visits every simplex with initial vertex v. Returns false if the visitor stopped.
  template <class Visitor>
  bool walk(VertexId v, Visitor&& visit) {
    prefix_.assign(1, v);
    if (!prune_) return descend_unpruned(visit);
    frame(0) = g_.out_row(v);
    return descend(0, visit);
  }

 private:
  BitVector& frame(std::size_t depth) {
    while (extensions_.size() <= depth) extensions_.emplace_back(g_.vertex_count());
    return extensions_[depth];
  }

  template <class Visitor>
  bool descend(std::size_t depth, Visitor& visit) {
    if (visit(SimplexView(prefix_)) == Visit::Stop) return false;
    if (depth == max_dim_) return true;
    // An empty extension set means no simplex has this prefix; skip the branch.
    if (extensions_[depth].none()) return true;
    frame(depth + 1);
    const auto words = extensions_[depth].words();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      for (BitVector::Word bits = words[wi]; bits != 0; bits &= bits - 1) {
        const auto w = static_cast<VertexId>(wi * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        prefix_.push_back(w);
        extensions_[depth + 1].assign_and(extensions_[depth], g_.out_row(w));
        const bool go_on = descend(depth + 1, visit);
        prefix_.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  // Reference path without bitsets or pruning: every vertex is tried as a child.
  template <class Visitor>
  bool descend_unpruned(Visitor& visit) {
    if (visit(SimplexView(prefix_)) == Visit::Stop) return false;
    if (prefix_.size() - 1 == max_dim_) return true;
    for (VertexId w = 0; w < g_.vertex_count(); ++w) {
      bool ok = true;
      for (VertexId u : prefix_) ok = ok && u != w && g_.has_edge(u, w);
      if (!ok) continue;
      prefix_.push_back(w);
      const bool go_on = descend_unpruned(visit);
      prefix_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const DirectedGraph& g_;
  std::size_t max_dim_;
  bool prune_;
  std::vector<BitVector> extensions_;
  std::vector<VertexId> prefix_;
};

/// Visits each simplex of dimension <= max_dim whose initial vertex is in part
/// (all vertices when part is empty), initial vertices in the given order.
/// Returns false if the visitor stopped the enumeration.
template <class Visitor>
bool for_each_simplex(const DirectedGraph& g, std::size_t max_dim, Visitor&& visit,
                      std::span<const VertexId> part = {}, bool prune = true) {
  SimplexWalker walker(g, max_dim, prune);
  if (part.empty()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!walker.walk(v, visit)) return false;
    return true;
  }
  for (VertexId v : part)
    if (!walker.walk(v, visit)) return false;
  return true;
}

struct CellCountReport {
  std::vector<std::uint64_t> counts;  // indexed by dimension, trailing zeros trimmed
  std::int64_t euler_characteristic = 0;

  static CellCountReport from_counts(std::vector<std::uint64_t> counts);
  friend bool operator==(const CellCountReport&, const CellCountReport&) = default;
};

class CountCheckpoint;

/// Parallel counting kernel: initial vertices are handed to threads dynamically.
/// With a checkpoint, vertices already recorded there are skipped and their
/// stored counts reused; newly finished vertices are appended.
CellCountReport count_cells(const DirectedGraph& g, std::size_t max_dim = kUnboundedDim, int threads = 1,
                            CountCheckpoint* checkpoint = nullptr);

/// Single-threaded reference for count_cells.
CellCountReport count_cells_serial(const DirectedGraph& g, std::size_t max_dim = kUnboundedDim);

}  // namespace dflag
