#include "dflag/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dflag/errors.hpp"

namespace dflag {
namespace {

using Kind = ParseError::Kind;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

/// Yields content lines (comments and blank lines removed) with 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string_view& content, std::size_t& line_no) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      std::string_view view = buffer_;
      if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
      view = trim(view);
      if (view.empty()) continue;
      content = view;
      line_no = line_;
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

std::uint64_t parse_index(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(Kind::Malformed, line, fmt::format("expected a non-negative vertex id, got '{}'", token));
  return value;
}

double parse_weight(std::string_view token, std::size_t line) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(Kind::Malformed, line, fmt::format("expected a number, got '{}'", token));
  if (!std::isfinite(value)) throw ParseError(Kind::BadWeight, line, fmt::format("non-finite value '{}'", token));
  return value;
}

bool is_dim_header(std::string_view content, std::string_view dim) {
  const auto tokens = split(content);
  return tokens.size() == 2 && tokens[0] == "dim" && tokens[1] == dim;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(Kind::Malformed, 0, fmt::format("cannot open '{}'", path));
  return in;
}

void check_weights_uniform(const std::vector<WeightedEdge>& edges, std::size_t line) {
  const auto weighted = std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.weight.has_value(); });
  if (weighted != 0 && static_cast<std::size_t>(weighted) != edges.size())
    throw ParseError(Kind::Malformed, line, "either every edge or no edge must carry a weight");
}

}  // namespace

DirectedGraph load_flag_file(std::istream& in) {
  LineReader reader(in);
  std::string_view content;
  std::size_t line = 0;

  if (!reader.next(content, line) || !is_dim_header(content, "0"))
    throw ParseError(Kind::Malformed, line, "expected 'dim 0'");

  std::vector<double> vertex_values;
  bool have_line = reader.next(content, line);
  if (have_line && split(content).front() != "dim") {
    for (auto token : split(content)) vertex_values.push_back(parse_weight(token, line));
    have_line = reader.next(content, line);
  }
  const std::size_t n = vertex_values.size();

  std::vector<WeightedEdge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t last_line = line;
  if (have_line) {
    if (!is_dim_header(content, "1")) throw ParseError(Kind::Malformed, line, "expected 'dim 1'");
    while (reader.next(content, line)) {
      last_line = line;
      const auto tokens = split(content);
      if (tokens.size() != 2 && tokens.size() != 3)
        throw ParseError(Kind::Malformed, line, "expected 'source target [weight]'");
      const auto from = parse_index(tokens[0], line);
      const auto to = parse_index(tokens[1], line);
      if (from >= n || to >= n)
        throw ParseError(Kind::VertexOutOfRange, line, fmt::format("vertex id out of range [0, {})", n));
      if (from == to) throw ParseError(Kind::Loop, line, fmt::format("loop at vertex {}", from));
      if (!seen.insert((from << 32) | to).second)
        throw ParseError(Kind::DuplicateEdge, line, fmt::format("duplicate edge {} {}", from, to));
      WeightedEdge e{{static_cast<VertexId>(from), static_cast<VertexId>(to)}, std::nullopt};
      if (tokens.size() == 3) e.weight = parse_weight(tokens[2], line);
      edges.push_back(e);
    }
  }
  check_weights_uniform(edges, last_line);
  return DirectedGraph(n, edges, std::move(vertex_values));
}

DirectedGraph load_flag_file(const std::string& path) {
  auto in = open(path);
  return load_flag_file(in);
}

void write_flag_file(std::ostream& out, const DirectedGraph& g) {
  out << "dim 0\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != 0) out << ' ';
    fmt::print(out, "{}", g.has_vertex_weights() ? g.vertex_weight(v) : 0.0);
  }
  out << "\ndim 1\n";
  for (const auto [from, to] : g.edges()) {
    if (g.has_edge_weights())
      fmt::print(out, "{} {} {}\n", from, to, g.edge_weight(from, to));
    else
      fmt::print(out, "{} {}\n", from, to);
  }
}

DirectedGraph load_edge_list(std::istream& in, bool directed) {
  struct RawEdge {
    std::uint64_t from, to;
    std::optional<double> weight;
    std::size_t line;
  };
  LineReader reader(in);
  std::string_view content;
  std::size_t line = 0;
  std::vector<RawEdge> raw;
  std::vector<std::uint64_t> ids;
  while (reader.next(content, line)) {
    const auto tokens = split(content);
    if (tokens.size() != 2 && tokens.size() != 3) throw ParseError(Kind::Malformed, line, "expected 'u v [w]'");
    RawEdge e{parse_index(tokens[0], line), parse_index(tokens[1], line), std::nullopt, line};
    if (tokens.size() == 3) e.weight = parse_weight(tokens[2], line);
    if (e.from == e.to) throw ParseError(Kind::Loop, line, fmt::format("loop at vertex {}", e.from));
    ids.push_back(e.from);
    ids.push_back(e.to);
    raw.push_back(e);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto compact = [&](std::uint64_t id) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  // Keyed by the stored orientation; remembers which input orientations were seen.
  struct Seen {
    std::size_t index;
    bool forward, backward;
  };
  std::map<std::pair<VertexId, VertexId>, Seen> seen;
  std::vector<WeightedEdge> edges;
  for (const auto& e : raw) {
    VertexId from = compact(e.from);
    VertexId to = compact(e.to);
    const bool reversed = !directed && from > to;
    if (reversed) std::swap(from, to);
    auto [it, inserted] = seen.try_emplace({from, to}, Seen{edges.size(), false, false});
    auto& orientation = reversed ? it->second.backward : it->second.forward;
    if (orientation || (!inserted && edges[it->second.index].weight != e.weight))
      throw ParseError(Kind::DuplicateEdge, e.line, fmt::format("duplicate edge {} {}", e.from, e.to));
    orientation = true;
    if (inserted) edges.push_back({{from, to}, e.weight});
  }
  check_weights_uniform(edges, line);
  return DirectedGraph(ids.size(), edges);
}

DirectedGraph load_edge_list(const std::string& path, bool directed) {
  auto in = open(path);
  return load_edge_list(in, directed);
}

}  // namespace dflag

namespace dflag {

DirectedGraph orient_undirected(const DirectedGraph& g) {
  std::vector<WeightedEdge> edges;
  for (const auto [from, to] : g.edges()) {
    const VertexId lo = std::min(from, to);
    const VertexId hi = std::max(from, to);
    std::optional<double> weight;
    if (g.has_edge_weights()) weight = g.edge_weight(from, to);
    if (from > to && g.has_edge(to, from)) {
      if (g.has_edge_weights() && g.edge_weight(to, from) != *weight)
        throw std::invalid_argument(fmt::format("reciprocal edges {} {} carry different weights", lo, hi));
      continue;
    }
    edges.push_back({{lo, hi}, weight});
  }
  std::optional<std::vector<double>> vertex_weights;
  if (g.has_vertex_weights()) {
    vertex_weights.emplace();
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_weights->push_back(g.vertex_weight(v));
  }
  return DirectedGraph(g.vertex_count(), edges, std::move(vertex_weights));
}

}  // namespace dflag
