// Command-line front end: flag parsing only; all work happens in dflag::cli::run.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "dflag/cli.hpp"

int main(int argc, char** argv) {
  using namespace dflag;
  using namespace dflag::cli;

  RunConfig config;
  std::string filtration = "zero";
  std::optional<std::size_t> max_dim;

  CLI::App app{"Directed flag complex cell counts, Betti numbers and persistent homology"};
  app.fallthrough();
  app.add_option("--input", config.input, "Graph file")->required()->check(CLI::ExistingFile);
  app.add_option("--format", config.format, "Input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"flag", InputFormat::Flag}, {"edge-list", InputFormat::EdgeList}}));
  app.add_option("--mode", config.mode, "What to compute")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{
          {"count", Mode::Count}, {"homology", Mode::Homology}, {"persistence", Mode::Persistence}}));
  app.add_flag("--undirected", config.undirected, "Treat edges as undirected (oriented low id -> high id)");
  app.add_option("--filtration", filtration, "Filtration algorithm")
      ->check(CLI::IsMember({"zero", "vertex-max", "edge-max", "max"}));
  app.add_option("--modulus", config.modulus, "Prime coefficient field");
  app.add_option("--approximate", config.approximate, "Abandon columns after this many reduction steps");
  app.add_option("--min-dim", config.min_dim, "Lowest dimension reported");
  app.add_option("--max-dim", max_dim, "Highest dimension (cells in count mode, homology otherwise)");
  app.add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--in-memory", config.in_memory, "Keep the whole complex in memory");
  app.add_option("--checkpoint", config.checkpoint, "Count mode: resumable per-vertex progress file");
  app.add_flag("--skip-zero-bars,!--keep-zero-bars", config.skip_zero_bars, "Hide intervals of length zero");
  app.add_option("--output", config.output, "Write the report here instead of stdout");

  OracleQuery query = OracleQuery::Betti;
  auto* oracle = app.add_subcommand("oracle", "Answer with the brute-force reference implementation (small inputs)");
  oracle->add_option("--what", query, "Quantity to compute")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OracleQuery>{
          {"count", OracleQuery::Count}, {"betti", OracleQuery::Betti}, {"barcode", OracleQuery::Barcode}}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kConfigError;
  }

  config.filtration.algorithm = *parse_filtration_algorithm(filtration);
  if (max_dim) config.max_dim = *max_dim;

  if (oracle->parsed()) return run_oracle(config, query, std::cout, std::cerr);
  return run(config, std::cout, std::cerr);
}
