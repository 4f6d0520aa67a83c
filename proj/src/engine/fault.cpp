#include "graphsort/engine/fault.hpp"

#include <stdexcept>
#include <string>

namespace graphsort::engine {

FaultModel FaultModel::constant(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("FaultModel: p must lie in (0, 1]");
  FaultModel model;
  model.mode_ = Mode::Constant;
  model.lower_bound_ = p;
  return model;
}

FaultModel FaultModel::per_pair(PairProbability probability, double lower_bound) {
  if (!(lower_bound > 0.0 && lower_bound <= 1.0)) {
    throw std::invalid_argument("FaultModel: lower bound must lie in (0, 1]");
  }
  if (!probability) throw std::invalid_argument("FaultModel: empty per-pair callback");
  FaultModel model;
  model.mode_ = Mode::PerPair;
  model.lower_bound_ = lower_bound;
  model.per_pair_ = std::move(probability);
  return model;
}

double FaultModel::success_probability(Index i, Index j) const {
  switch (mode_) {
    case Mode::None:
      return 1.0;
    case Mode::Constant:
      return lower_bound_;
    case Mode::PerPair: {
      const double p = per_pair_(i, j);
      if (!(p >= lower_bound_ && p <= 1.0)) {
        throw std::domain_error("FaultModel: p(" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + std::to_string(p) + " outside [lower bound, 1]");
      }
      return p;
    }
  }
  return 1.0;
}

}  // namespace graphsort::engine
