#include "dflag/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "dflag/errors.hpp"

namespace dflag::oracle {
namespace {

std::uint32_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t q) {
  std::uint64_t result = 1;
  base %= q;
  for (; exp != 0; exp >>= 1, base = base * base % q)
    if (exp & 1U) result = result * base % q;
  return static_cast<std::uint32_t>(result);
}

// Fermat inverse, deliberately unrelated to the production inverse table.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) { return power_mod(a, q - 2, q); }

bool is_ordered_clique(const Tuple& t, const DirectedGraph& g) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i != j && t[i] == t[j]) return false;
      if (i < j && !g.has_edge(t[i], t[j])) return false;
    }
  return true;
}

Tuple drop(const Tuple& t, std::size_t i) {
  Tuple face = t;
  face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
  return face;
}

}  // namespace

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_ || q_ != rhs.q_) throw std::invalid_argument("matrix shape or modulus mismatch");
  DenseMatrix out(rows_, rhs.cols_, q_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t l = 0; l < cols_; ++l) sum += std::uint64_t{at(i, l)} * rhs.at(l, j);
      out.set(i, j, static_cast<std::int64_t>(sum % q_));
    }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_, q_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::vector<Tuple>> enumerate(const DirectedGraph& g, std::size_t max_dim) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxVertices)
    throw ResourceLimitError("oracle enumeration refuses graphs with more than " + std::to_string(kMaxVertices) +
                             " vertices");
  std::vector<std::vector<Tuple>> levels;
  if (n == 0) return levels;
  std::vector<Tuple> level;
  for (VertexId v = 0; v < n; ++v) level.push_back({v});
  // A (k+1)-tuple can only be a clique if its first k entries are, so candidates
  // come from the previous level; each candidate is then checked in full.
  while (!level.empty()) {
    levels.push_back(level);
    if (levels.size() > max_dim) break;
    std::vector<Tuple> next;
    for (const auto& t : level)
      for (VertexId w = 0; w < n; ++w) {
        Tuple candidate = t;
        candidate.push_back(w);
        if (is_ordered_clique(candidate, g)) next.push_back(std::move(candidate));
      }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return levels;
}

std::size_t rank(DenseMatrix m) {
  const std::uint32_t q = m.modulus();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto tmp = m.at(r, j);
      m.set(r, j, m.at(pivot, j));
      m.set(pivot, j, tmp);
    }
    const std::uint32_t inv = inverse_mod(m.at(r, c), q);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const std::uint64_t factor = std::uint64_t{m.at(i, c)} * inv % q;
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(i, j, static_cast<std::int64_t>(m.at(i, j)) - static_cast<std::int64_t>(factor * m.at(r, j) % q));
    }
    ++r;
  }
  return r;
}

DenseMatrix boundary_matrix(const std::vector<Tuple>& simplices, const std::vector<Tuple>& faces, std::uint32_t q) {
  std::map<Tuple, std::size_t> row_of;
  for (std::size_t i = 0; i < faces.size(); ++i) row_of[faces[i]] = i;
  DenseMatrix d(faces.size(), simplices.size(), q);
  for (std::size_t j = 0; j < simplices.size(); ++j)
    for (std::size_t i = 0; i < simplices[j].size(); ++i) {
      const auto row = row_of.at(drop(simplices[j], i));
      d.set(row, j, static_cast<std::int64_t>(d.at(row, j)) + (i % 2 == 0 ? 1 : -1));
    }
  return d;
}

std::vector<std::uint64_t> betti(const DirectedGraph& g, std::size_t max_dim, std::uint32_t q) {
  const auto levels = enumerate(g, max_dim + 1);
  std::vector<std::size_t> ranks(levels.size() + 1, 0);  // ranks[k] = rank d_k
  for (std::size_t k = 1; k < levels.size(); ++k) ranks[k] = rank(boundary_matrix(levels[k], levels[k - 1], q));
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < levels.size() && k <= max_dim; ++k)
    out.push_back(levels[k].size() - ranks[k] - ranks[k + 1]);
  return out;
}

double filter_value(std::string_view algorithm, const Tuple& s, const DirectedGraph& g) {
  double vertex_max = -std::numeric_limits<double>::infinity();
  double edge_max = -std::numeric_limits<double>::infinity();
  if (g.has_vertex_weights())
    for (VertexId v : s) vertex_max = std::max(vertex_max, g.vertex_weight(v));
  if (g.has_edge_weights())
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edge_max = std::max(edge_max, g.edge_weight(s[i], s[j]));
  if (algorithm == "zero") return 0.0;
  if (algorithm == "vertex-max") return vertex_max;
  if (algorithm == "edge-max") {
    if (s.size() == 1) return g.has_vertex_weights() ? vertex_max : 0.0;
    return edge_max;
  }
  if (algorithm == "max") {
    const double value = std::max(vertex_max, edge_max);
    return value == -std::numeric_limits<double>::infinity() ? 0.0 : value;
  }
  throw std::invalid_argument("unknown filtration '" + std::string(algorithm) + "'");
}

std::vector<std::vector<Bar>> barcode(const DirectedGraph& g, std::string_view algorithm, std::size_t max_dim,
                                      std::uint32_t q) {
  const auto levels = enumerate(g, max_dim + 1);
  struct Cell {
    double value;
    std::size_t dim;
    Tuple vertices;
  };
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& t : levels[k]) cells.push_back({filter_value(algorithm, t, g), k, t});
  if (cells.size() > kMaxBarcodeCells)
    throw ResourceLimitError("oracle barcode refuses more than " + std::to_string(kMaxBarcodeCells) + " cells");
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.value, a.dim, a.vertices) < std::tie(b.value, b.dim, b.vertices);
  });

  std::map<Tuple, std::size_t> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i].vertices] = i;

  // Columns as row -> coefficient maps; low = largest row.
  std::vector<std::map<std::size_t, std::uint32_t>> columns(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& t = cells[j].vertices;
    if (t.size() < 2) continue;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto& entry = columns[j][position.at(drop(t, i))];
      entry = static_cast<std::uint32_t>((entry + (i % 2 == 0 ? 1 : q - 1)) % q);
      if (entry == 0) columns[j].erase(position.at(drop(t, i)));
    }
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> column_with_low(cells.size(), kNone);
  std::vector<bool> paired(cells.size(), false);
  std::vector<std::vector<Bar>> bars(std::min(levels.size(), max_dim + 1));
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty()) {
      const auto [low, coeff] = *col.rbegin();
      const auto other = column_with_low[low];
      if (other == kNone) break;
      const auto& reducer = columns[other];
      const std::uint64_t factor =
          std::uint64_t{q - coeff} * inverse_mod(reducer.rbegin()->second, q) % q;  // -coeff / reducer's low
      for (const auto& [row, c] : reducer) {
        auto& entry = col[row];
        entry = static_cast<std::uint32_t>((entry + factor * c) % q);
        if (entry == 0) col.erase(row);
      }
    }
    if (col.empty()) continue;
    const auto low = col.rbegin()->first;
    column_with_low[low] = j;
    paired[low] = paired[j] = true;
    const auto dim = cells[low].dim;
    if (dim <= max_dim) bars[dim].push_back({cells[low].value, cells[j].value});
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!paired[i] && cells[i].dim < bars.size())
      bars[cells[i].dim].push_back({cells[i].value, std::numeric_limits<double>::infinity()});
  for (auto& dim : bars) std::sort(dim.begin(), dim.end());
  return bars;
}

}  // namespace dflag::oracle
