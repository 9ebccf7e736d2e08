#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dflag/coboundary.hpp"
#include "dflag/field.hpp"

namespace dflag {

inline constexpr std::size_t kNeverHash = std::numeric_limits<std::size_t>::max();

/// Working column during reduction: a max-heap of (row, coeff) entries in which a
/// row may occur many times. After hash_threshold pushes the queue also keeps a
/// row -> coefficient map; a row already present there only updates the map
/// instead of entering the heap again.
class ReductionQueue {
 public:
  explicit ReductionQueue(const PrimeField& field, std::size_t hash_threshold = 1024)
      : field_(field), threshold_(hash_threshold) {}

  void push(SimplexId row, Coefficient coeff);

  /// Largest row whose accumulated coefficient is nonzero, removing all of its
  /// occurrences; rows that cancel to zero are dropped on the way.
  std::optional<ColumnEntry> pop_pivot();

  void clear();
  bool hashing() const noexcept { return hashing_; }
  std::size_t push_count() const noexcept { return pushes_; }

 private:
  struct ByRow {
    bool operator()(const ColumnEntry& a, const ColumnEntry& b) const noexcept { return a.row < b.row; }
  };

  const PrimeField& field_;
  std::size_t threshold_;
  std::size_t pushes_ = 0;
  bool hashing_ = false;
  std::vector<ColumnEntry> heap_;
  std::unordered_map<SimplexId, Coefficient> overflow_;
};

}  // namespace dflag
