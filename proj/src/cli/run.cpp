#include "dflag/cli.hpp"

#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dflag/count_checkpoint.hpp"
#include "dflag/errors.hpp"
#include "dflag/graph_io.hpp"
#include "dflag/oracle.hpp"

namespace dflag::cli {
namespace {

DirectedGraph load(const RunConfig& config) {
  if (config.format == InputFormat::EdgeList) return load_edge_list(config.input, !config.undirected);
  DirectedGraph g = load_flag_file(config.input);
  if (!config.undirected) return g;
  try {
    return orient_undirected(g);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::DuplicateEdge, 0, e.what());
  }
}

void check(const RunConfig& config) {
  if (config.threads < 1) throw ConfigError("--threads must be at least 1");
  if (config.approximate && *config.approximate == 0) throw ConfigError("--approximate must be positive");
  if (config.min_dim > config.max_dim) throw ConfigError("--min-dim exceeds --max-dim");
  if (config.checkpoint && config.mode != Mode::Count) throw ConfigError("--checkpoint only applies to count mode");
  PrimeField field(config.modulus);  // validates the modulus
}

std::string format_value(double x) {
  return x == kInfinity ? std::string("∞") : fmt::format("{}", x);
}

/// Runs body with the report stream, mapping exceptions to exit codes.
template <class Body>
int guarded(const RunConfig& config, std::ostream& out, std::ostream& err, Body&& body) {
  try {
    std::ostringstream report;
    body(report);
    if (config.output) {
      std::ofstream file(*config.output);
      if (!file) throw ConfigError(fmt::format("cannot write '{}'", *config.output));
      file << report.str();
    } else {
      out << report.str();
    }
    return kSuccess;
  } catch (const ParseError& e) {
    fmt::print(err, "parse error: {}\n", e.what());
    return kParseError;
  } catch (const ConfigError& e) {
    fmt::print(err, "configuration error: {}\n", e.what());
    return kConfigError;
  } catch (const ResourceLimitError& e) {
    fmt::print(err, "resource limit: {}\n", e.what());
    return kResourceLimit;
  } catch (const std::bad_alloc&) {
    fmt::print(err, "resource limit: out of memory\n");
    return kResourceLimit;
  }
}

}  // namespace

void print_counts(std::ostream& out, const CellCountReport& report) {
  for (std::size_t d = 0; d < report.counts.size(); ++d) fmt::print(out, "dim {}: {}\n", d, report.counts[d]);
  fmt::print(out, "euler: {}\n", report.euler_characteristic);
}

void print_homology(std::ostream& out, const HomologyReport& report, bool with_barcode) {
  for (const auto& dim : report.dimensions) {
    fmt::print(out, "dim {}: betti {} (skipped {}, error ≤ {})\n", dim.dimension, dim.betti, dim.skipped,
               dim.error_bound);
    if (!with_barcode) continue;
    for (const auto& bar : dim.barcode) fmt::print(out, "[{}, {})\n", format_value(bar.birth), format_value(bar.death));
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&](std::ostream& report) {
    check(config);
    const DirectedGraph g = load(config);
    if (config.mode == Mode::Count) {
      std::optional<CountCheckpoint> checkpoint;
      if (config.checkpoint) checkpoint.emplace(*config.checkpoint, g.vertex_count(), config.max_dim);
      print_counts(report, count_cells(g, config.max_dim, config.threads, checkpoint ? &*checkpoint : nullptr));
      return;
    }
    HomologyOptions options;
    options.min_dim = config.min_dim;
    options.max_dim = config.max_dim;
    options.modulus = config.modulus;
    options.approx_limit = config.approximate;
    options.threads = config.threads;
    options.in_memory = config.in_memory;
    options.skip_zero_bars = config.skip_zero_bars;
    if (config.mode == Mode::Persistence)
      print_homology(report, compute_persistence(g, config.filtration, options), true);
    else
      print_homology(report, compute_homology(g, config.filtration, options), false);
  });
}

int run_oracle(const RunConfig& config, OracleQuery query, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&](std::ostream& report) {
    check(config);
    const DirectedGraph g = load(config);
    const std::size_t max_dim = config.max_dim == kUnboundedDim ? oracle::kMaxVertices : config.max_dim;
    switch (query) {
      case OracleQuery::Count: {
        std::vector<std::uint64_t> counts;
        for (const auto& level : oracle::enumerate(g, max_dim)) counts.push_back(level.size());
        print_counts(report, CellCountReport::from_counts(std::move(counts)));
        return;
      }
      case OracleQuery::Betti: {
        const auto betti = oracle::betti(g, max_dim, config.modulus);
        for (std::size_t k = config.min_dim; k < betti.size(); ++k) fmt::print(report, "dim {}: betti {}\n", k, betti[k]);
        return;
      }
      case OracleQuery::Barcode: {
        validate(config.filtration, g);
        const auto bars = oracle::barcode(g, to_string(config.filtration.algorithm), max_dim, config.modulus);
        for (std::size_t k = config.min_dim; k < bars.size(); ++k) {
          fmt::print(report, "dim {}:\n", k);
          for (const auto& bar : bars[k])
            if (!(config.skip_zero_bars && bar.birth == bar.death))
              fmt::print(report, "[{}, {})\n", format_value(bar.birth), format_value(bar.death));
        }
        return;
      }
    }
  });
}

}  // namespace dflag::cli
