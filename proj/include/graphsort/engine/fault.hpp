#pragma once

#include <functional>

#include "graphsort/types.hpp"

namespace graphsort::engine {

// Faulty comparator: pair (i, j) is sorted with probability p_ij >= p and
// otherwise left untouched. It never unsorts.
class FaultModel {
 public:
  enum class Mode { None, Constant, PerPair };
  using PairProbability = std::function<double(Index, Index)>;

  FaultModel() = default;

  static FaultModel none() { return {}; }
  static FaultModel constant(double p);
  static FaultModel per_pair(PairProbability probability, double lower_bound);

  Mode mode() const { return mode_; }
  double lower_bound() const { return lower_bound_; }
  bool always_succeeds() const { return mode_ == Mode::None; }

  /// p_ij. For PerPair the callback result is checked against [p, 1].
  double success_probability(Index i, Index j) const;

 private:
  Mode mode_ = Mode::None;
  double lower_bound_ = 1.0;
  PairProbability per_pair_;
};

}  // namespace graphsort::engine
