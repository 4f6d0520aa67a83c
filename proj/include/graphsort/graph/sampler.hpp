#pragma once

#include <vector>

#include "graphsort/graph/alias_table.hpp"
#include "graphsort/graph/weights.hpp"

namespace graphsort::graph {

/// Preprocessed pair sampler for a PairWeightSpec. Immutable after
/// construction, so one instance can be shared by concurrent runners that
/// each bring their own Rng.
///
/// Distance-symmetric families draw a distance d with probability
/// proportional to (n - d) w(d) and then a uniform offset, so build is O(n)
/// and a draw is O(1). Other families hold an alias table over the explicit
/// edge list.
class EdgeSampler {
 public:
  explicit EdgeSampler(PairWeightSpec spec);

  const PairWeightSpec& spec() const { return spec_; }
  Index n() const { return spec_.n; }
  double total_weight() const { return total_weight_; }

  Pair sample(Rng& rng) const {
    if (by_distance_) {
      const Index d = distances_.sample(rng) + 1;
      std::uniform_int_distribution<Index> offset(0, spec_.n - d - 1);
      const Index i = offset(rng);
      return {i, i + d};
    }
    return edges_[edge_table_.sample(rng)];
  }

 private:
  PairWeightSpec spec_;
  double total_weight_ = 0.0;
  bool by_distance_ = false;
  AliasTable distances_;  // index d-1
  std::vector<Pair> edges_;
  AliasTable edge_table_;
};

inline EdgeSampler build_sampler(PairWeightSpec spec) { return EdgeSampler(std::move(spec)); }

inline Pair sample_pair(const EdgeSampler& sampler, Rng& rng) { return sampler.sample(rng); }

}  // namespace graphsort::graph
