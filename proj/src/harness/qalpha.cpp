#include "graphsort/harness/qalpha.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace graphsort::harness {
namespace {

Index pair_distance(const parallel::MatchingSamplerSpec& spec, Index i, Index j) {
  if (spec.kind == parallel::MatchingKind::ThinnedIid) return j - i;
  return parallel::circular_distance(spec.n, i, j);
}

}  // namespace

double qalpha_constant(const parallel::MatchingSamplerSpec& spec) {
  parallel::validate(spec);
  const double n = static_cast<double>(spec.n);
  switch (spec.kind) {
    case parallel::MatchingKind::StructuredPowerOfTwo:
      return 1.0 / (4.0 * static_cast<double>(floor_log2(spec.n)));
    case parallel::MatchingKind::ThinnedIid:
      return 1.0 / (4.0 * (n / static_cast<double>(spec.p)) * std::log(n));
    case parallel::MatchingKind::HypercubeDimCut:
      break;
  }
  throw std::invalid_argument("no Q_alpha constant for " + parallel::kind_name(spec.kind));
}

QAlphaReport verify_qalpha_exact(Index n, double alpha_scale) {
  const parallel::MatchingSamplerSpec spec{parallel::MatchingKind::StructuredPowerOfTwo, n, 0};
  QAlphaReport report;
  report.mode = "exact";
  report.n = n;
  report.alpha = qalpha_constant(spec) * alpha_scale;

  const std::vector<double> q = parallel::exact_structured_marginals(n);
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Index dist = parallel::circular_distance(n, i, j);
      const double margin = q[i * n + j] * static_cast<double>(dist) / report.alpha;
      if (margin < report.worst_margin) {
        report.worst_margin = margin;
        report.worst_pair = {i, j};
        report.worst_q = q[i * n + j];
        report.worst_distance = dist;
      }
    }
  }
  // Some margins are exactly 1 in real arithmetic.
  report.pass = report.worst_margin >= 1.0 - 1e-9;
  return report;
}

QAlphaReport verify_qalpha_montecarlo(const parallel::MatchingSamplerSpec& spec,
                                      std::uint64_t samples, std::uint64_t seed,
                                      double alpha_scale) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  QAlphaReport report;
  report.mode = "montecarlo";
  report.n = spec.n;
  report.p = spec.p;
  report.samples = samples;
  report.alpha = qalpha_constant(spec) * alpha_scale;

  const Index n = spec.n;
  parallel::MatchingSampler sampler(spec);
  Rng rng(seed);
  std::vector<std::uint64_t> counts(n * n, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (const Pair& e : sampler.sample(rng).pairs) ++counts[e.first * n + e.second];
  }

  const double total = static_cast<double>(samples);
  double worst_slack = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double q = static_cast<double>(counts[i * n + j]) / total;
      const double sigma = std::sqrt(q * (1.0 - q) / total);
      const Index dist = pair_distance(spec, i, j);
      const double scale = static_cast<double>(dist) / report.alpha;
      const double slack = (q + 3.0 * sigma) * scale;
      if (slack < worst_slack) {
        worst_slack = slack;
        report.worst_pair = {i, j};
        report.worst_q = q;
        report.worst_sigma = sigma;
        report.worst_margin = q * scale;
        report.worst_distance = dist;
      }
    }
  }
  report.pass = worst_slack >= 1.0;
  return report;
}

std::string to_json(const QAlphaReport& r) {
  nlohmann::ordered_json j{{"mode", r.mode},
                   {"n", r.n},
                   {"alpha", r.alpha},
                   {"pass", r.pass},
                   {"worstPair", {r.worst_pair.first, r.worst_pair.second}},
                   {"worstDistance", r.worst_distance},
                   {"worstQ", r.worst_q},
                   {"worstMargin", r.worst_margin}};
  if (r.mode == "montecarlo") {
    j["p"] = r.p;
    j["samples"] = r.samples;
    j["worstSigma"] = r.worst_sigma;
  }
  return j.dump(2);
}

}  // namespace graphsort::harness
