#include "dflag/reduction.hpp"

#include <stdexcept>

#include "dflag/reduction_queue.hpp"

namespace dflag {
namespace {

void check_order(const CoboundaryMatrix& m) {
  const auto& order = m.order;
  if (order.size() != m.columns.size()) throw std::invalid_argument("column order is not a permutation");
  std::vector<char> seen(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto c = order[i];
    if (c >= order.size() || seen[c] != 0) throw std::invalid_argument("column order is not a permutation");
    seen[c] = 1;
    if (i > 0 && m.columns[order[i - 1]].filtration < m.columns[c].filtration)
      throw std::invalid_argument("columns are not sorted by filtration");
  }
}

}  // namespace

ReductionResult reduce(const CoboundaryMatrix& m, const PrimeField& field, const ReduceOptions& options) {
  check_order(m);
  ReductionResult result;
  result.pivot_column.assign(m.row_count(), kNoColumn);
  // Reduced pivot columns, largest row first, pivot coefficient normalized to 1.
  std::vector<std::vector<ColumnEntry>> reduced(m.columns.size());
  ReductionQueue queue(field, options.hash_threshold);

  for (const SimplexId c : m.order) {
    const auto& column = m.columns[c];
    queue.clear();
    for (const auto& e : column.entries) queue.push(e.row, e.coeff);

    std::uint64_t steps = 0;
    while (const auto pivot = queue.pop_pivot()) {
      const SimplexId reducer = result.pivot_column[pivot->row];
      if (reducer == kNoColumn) {
        const Coefficient scale = field.inverse(pivot->coeff);
        auto& stored = reduced[c];
        stored.push_back({pivot->row, 1});
        while (const auto e = queue.pop_pivot()) stored.push_back({e->row, field.mul(e->coeff, scale)});
        result.pivot_column[pivot->row] = c;
        result.pairs.push_back({c, pivot->row, column.filtration, m.row_filtration[pivot->row]});
        break;
      }
      if (options.approx_limit && steps + 1 >= *options.approx_limit) {
        ++result.skipped;
        break;
      }
      ++steps;
      ++result.additions;
      // Adding -coeff times the reducer cancels the pivot row, so it is not pushed.
      const Coefficient factor = field.neg(pivot->coeff);
      const auto& other = reduced[reducer];
      for (std::size_t i = 1; i < other.size(); ++i) queue.push(other[i].row, field.mul(factor, other[i].coeff));
    }
  }
  return result;
}

}  // namespace dflag
