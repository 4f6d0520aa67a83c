#pragma once

#include <cstdint>
#include <string>

#include "graphsort/parallel/matching.hpp"

namespace graphsort::harness {

/// Certificate that pair marginals q_ij dominate alpha / dist(i, j).
struct QAlphaReport {
  std::string mode;  // exact or montecarlo
  Index n = 0;
  Index p = 0;
  double alpha = 0.0;
  std::uint64_t samples = 0;
  bool pass = false;
  Pair worst_pair;
  double worst_q = 0.0;
  double worst_sigma = 0.0;   // Monte Carlo standard error of worst_q
  double worst_margin = 0.0;  // worst_q * dist / alpha
  Index worst_distance = 0;
};

/// 1 / (4 lg n) for structured, 1 / (4 (n/p) ln n) for thinned.
double qalpha_constant(const parallel::MatchingSamplerSpec& spec);

/// Exhaustive check for the structured sampler, circular distance. Passes iff
/// every margin is >= 1 (up to 1e-9 relative rounding). alpha_scale
/// multiplies the tested alpha.
QAlphaReport verify_qalpha_exact(Index n, double alpha_scale = 1.0);

/// Empirical marginals from `samples` matchings. Passes iff every pair has
/// q_hat + 3 sigma_hat >= alpha / dist. Distance is circular for structured
/// and dimcut, linear for thinned.
QAlphaReport verify_qalpha_montecarlo(const parallel::MatchingSamplerSpec& spec,
                                      std::uint64_t samples, std::uint64_t seed,
                                      double alpha_scale = 1.0);

std::string to_json(const QAlphaReport& report);

}  // namespace graphsort::harness
