#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dflag/enumerate.hpp"
#include "dflag/filtration.hpp"
#include "dflag/reduction.hpp"

namespace dflag::cli {

enum class InputFormat { Flag, EdgeList };
enum class Mode { Count, Homology, Persistence };
enum class OracleQuery { Count, Betti, Barcode };

enum ExitCode : int { kSuccess = 0, kParseError = 1, kConfigError = 2, kResourceLimit = 3 };

struct RunConfig {
  std::string input;
  InputFormat format = InputFormat::Flag;
  Mode mode = Mode::Homology;
  bool undirected = false;
  FiltrationSpec filtration;
  std::uint32_t modulus = 2;
  std::optional<std::uint64_t> approximate;
  std::size_t min_dim = 0;
  std::size_t max_dim = kUnboundedDim;
  int threads = 1;
  bool in_memory = false;
  std::optional<std::string> checkpoint;
  bool skip_zero_bars = true;
  std::optional<std::string> output;  // stdout when empty
};

/// Loads the input, runs the configured mode and writes the report to
/// config.output or out. Diagnostics go to err. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Same input handling, answered by the brute-force oracle.
int run_oracle(const RunConfig& config, OracleQuery query, std::ostream& out, std::ostream& err);

void print_counts(std::ostream& out, const CellCountReport& report);
void print_homology(std::ostream& out, const HomologyReport& report, bool with_barcode);

}  // namespace dflag::cli
