#include "dflag/reduction_queue.hpp"

#include <algorithm>

namespace dflag {

void ReductionQueue::push(SimplexId row, Coefficient coeff) {
  if (coeff == 0) return;
  if (!hashing_ && pushes_ >= threshold_) hashing_ = true;
  ++pushes_;
  if (hashing_) {
    auto [it, inserted] = overflow_.try_emplace(row, coeff);
    if (!inserted) {
      it->second = field_.add(it->second, coeff);
      return;
    }
    coeff = 0;  // the map holds it
  }
  heap_.push_back({row, coeff});
  std::push_heap(heap_.begin(), heap_.end(), ByRow{});
}

std::optional<ColumnEntry> ReductionQueue::pop_pivot() {
  while (!heap_.empty()) {
    const SimplexId row = heap_.front().row;
    Coefficient sum = 0;
    while (!heap_.empty() && heap_.front().row == row) {
      sum = field_.add(sum, heap_.front().coeff);
      std::pop_heap(heap_.begin(), heap_.end(), ByRow{});
      heap_.pop_back();
    }
    if (hashing_) {
      if (auto it = overflow_.find(row); it != overflow_.end()) {
        sum = field_.add(sum, it->second);
        overflow_.erase(it);
      }
    }
    if (sum != 0) return ColumnEntry{row, sum};
  }
  return std::nullopt;
}

void ReductionQueue::clear() {
  heap_.clear();
  overflow_.clear();
  pushes_ = 0;
  hashing_ = false;
}

}  // namespace dflag
