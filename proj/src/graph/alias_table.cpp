#include "graphsort/graph/alias_table.hpp"

#include <cmath>
#include <stdexcept>

namespace graphsort::graph {

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t size = weights.size();
  if (size == 0) throw std::invalid_argument("AliasTable: empty weight vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("AliasTable: bad weight");
    sum += w;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("AliasTable: all weights are zero");

  prob_.assign(size, 0.0);
  alias_.resize(size);
  std::vector<double> scaled(size);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < size; ++i) {
    scaled[i] = weights[i] * static_cast<double>(size) / sum;
    alias_[i] = i;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    small.pop_back();
    const std::size_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding, except zero-weight columns which must
  // always redirect to a drawable entry.
  std::size_t heaviest = 0;
  for (std::size_t i = 1; i < size; ++i) {
    if (weights[i] > weights[heaviest]) heaviest = i;
  }
  for (std::size_t l : large) prob_[l] = 1.0;
  for (std::size_t s : small) {
    if (weights[s] > 0.0) {
      prob_[s] = 1.0;
    } else {
      prob_[s] = 0.0;
      alias_[s] = heaviest;
    }
  }
}

}  // namespace graphsort::graph
