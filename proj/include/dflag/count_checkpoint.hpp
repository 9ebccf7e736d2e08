#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "dflag/graph.hpp"

namespace dflag {

/// Append-only log of per-initial-vertex cell counts, so an interrupted count
/// run can resume. Format: a header line
///   # dflag count checkpoint n=<n> max_dim=<d>
/// then one line per finished vertex: "<v>: <c_0> <c_1> ... ;". A trailing
/// line without the terminating ';' (an interrupted write) is ignored.
class CountCheckpoint {
 public:
  /// Opens or creates the file. Throws ConfigError if an existing header
  /// does not match n and max_dim.
  CountCheckpoint(const std::string& path, std::size_t vertex_count, std::size_t max_dim);

  const std::map<VertexId, std::vector<std::uint64_t>>& completed() const noexcept { return completed_; }

  /// Thread-safe; flushes after every record.
  void record(VertexId v, const std::vector<std::uint64_t>& counts);

 private:
  std::map<VertexId, std::vector<std::uint64_t>> completed_;
  std::ofstream out_;
  std::mutex mutex_;
};

}  // namespace dflag
