#include "dflag/count_checkpoint.hpp"

#include <iterator>
#include <sstream>

#include <fmt/format.h>

#include "dflag/errors.hpp"

namespace dflag {

CountCheckpoint::CountCheckpoint(const std::string& path, std::size_t vertex_count, std::size_t max_dim) {
  const std::string header = fmt::format("# dflag count checkpoint n={} max_dim={}", vertex_count,
                                         max_dim == static_cast<std::size_t>(-1) ? std::string("all")
                                                                                  : std::to_string(max_dim));
  std::string contents;
  if (std::ifstream in(path); in) contents.assign(std::istreambuf_iterator<char>(in), {});
  const bool fresh = contents.empty();
  if (!fresh) {
    std::istringstream in(contents);
    std::string line;
    std::getline(in, line);
    if (line != header) throw ConfigError(fmt::format("checkpoint '{}' was written for a different run", path));
    while (std::getline(in, line)) {
      if (line.empty() || line.back() != ';') continue;
      std::istringstream fields(line);
      VertexId v = 0;
      char colon = 0;
      if (!(fields >> v >> colon) || colon != ':' || v >= vertex_count) continue;
      std::vector<std::uint64_t> counts;
      for (std::uint64_t c = 0; fields >> c;) counts.push_back(c);
      completed_[v] = std::move(counts);
    }
  }

  out_.open(path, std::ios::app);
  if (!out_) throw ConfigError(fmt::format("cannot open checkpoint '{}'", path));
  if (fresh) out_ << header << '\n';
  else if (contents.back() != '\n') out_ << '\n';  // terminate a torn record
  out_.flush();
}

void CountCheckpoint::record(VertexId v, const std::vector<std::uint64_t>& counts) {
  std::string line = fmt::format("{}:", v);
  for (auto c : counts) line += fmt::format(" {}", c);
  line += " ;\n";
  std::lock_guard lock(mutex_);
  completed_[v] = counts;
  out_ << line;
  out_.flush();
}

}  // namespace dflag
