#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphsort/types.hpp"

namespace graphsort::graph {

// Walker/Vose alias table over {0, ..., size-1}. Zero weights are allowed
// and are never drawn.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return prob_.size(); }

  std::size_t sample(Rng& rng) const {
    std::uniform_int_distribution<std::size_t> column(0, prob_.size() - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const std::size_t c = column(rng);
    return coin(rng) < prob_[c] ? c : alias_[c];
  }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace graphsort::graph
