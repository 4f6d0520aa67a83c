#include "graphsort/graph/sampler.hpp"

#include <bit>

#include "graphsort/graph/gray.hpp"

namespace graphsort::graph {

EdgeSampler::EdgeSampler(PairWeightSpec spec) : spec_(std::move(spec)) {
  total_weight_ = graph::total_weight(spec_);  // validates
  const Index n = spec_.n;

  if (is_distance_symmetric(spec_)) {
    by_distance_ = true;
    std::vector<double> profile(n - 1);
    for (Index d = 1; d < n; ++d) {
      profile[d - 1] = static_cast<double>(n - d) * distance_weight(spec_, d);
    }
    distances_ = AliasTable(profile);
    return;
  }

  std::vector<double> weights;
  if (std::holds_alternative<GrayHypercube>(spec_.family)) {
    const unsigned dims = floor_log2(n);
    edges_.reserve(n / 2 * dims);
    for (Index i = 0; i < n; ++i) {
      for (unsigned b = 0; b < dims; ++b) {
        const Index j = gray_inverse(gray_code(i) ^ (std::uint64_t{1} << b));
        if (i < j) edges_.push_back({i, j});
      }
    }
    weights.assign(edges_.size(), 1.0);
  } else {
    const auto& table = std::get<CustomTable>(spec_.family);
    for (const auto& [pair, w] : table.weights) {
      if (w > 0.0) {
        edges_.push_back(pair);
        weights.push_back(w);
      }
    }
  }
  edge_table_ = AliasTable(weights);
}

}  // namespace graphsort::graph
