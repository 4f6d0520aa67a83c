#include "graphsort/harness/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "graphsort/analysis/intervals.hpp"
#include "graphsort/analysis/inversions.hpp"
#include "graphsort/analysis/recurrence.hpp"
#include "graphsort/analysis/zero_one.hpp"
#include "graphsort/engine/sort_state.hpp"
#include "graphsort/graph/sampler.hpp"
#include "graphsort/run_stats.hpp"

namespace graphsort::harness {
namespace {

std::string keys_string(std::span<const Key> keys) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << ')';
  return out.str();
}

std::vector<Pair> random_comparators(Index n, Index length, Rng& rng) {
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Pair> out;
  out.reserve(length);
  while (out.size() < length) {
    const Index a = pick(rng), b = pick(rng);
    if (a != b) out.push_back(make_pair_ordered(a, b));
  }
  return out;
}

std::vector<Key> random_permutation(Index n, Rng& rng) {
  std::vector<Key> keys(n);
  std::iota(keys.begin(), keys.end(), Key{1});
  std::shuffle(keys.begin(), keys.end(), rng);
  return keys;
}

std::vector<Key> random_balanced(Index n, Rng& rng) {
  std::vector<Key> keys(n, 0);
  std::fill(keys.begin() + static_cast<std::ptrdiff_t>(n / 2), keys.end(), Key{1});
  do {
    std::shuffle(keys.begin(), keys.end(), rng);
  } while (graphsort::is_sorted(keys));
  return keys;
}

}  // namespace

void OracleReport::fail(std::string counterexample) {
  if (failures++ == 0) first_counterexample = std::move(counterexample);
}

std::string to_json(const OracleReport& r) {
  nlohmann::ordered_json j{{"check", r.check},
                   {"n", r.n},
                   {"trials", r.trials},
                   {"failures", r.failures},
                   {"firstCounterexample", nullptr}};
  if (r.first_counterexample) j["firstCounterexample"] = *r.first_counterexample;
  return j.dump(2);
}

OracleReport check_zero_one_principle(Index n, std::uint64_t traces, Index trace_length,
                                      std::uint64_t seed) {
  if (n < 2 || n > 10) throw std::invalid_argument("zero-one check needs 2 <= n <= 10");
  OracleReport report{"zero-one", n, 0, 0, std::nullopt};
  Rng rng(seed);
  std::vector<Key> perm(n);
  std::iota(perm.begin(), perm.end(), Key{1});
  do {
    for (std::uint64_t t = 0; t < traces; ++t) {
      const auto comparators = random_comparators(n, trace_length, rng);
      const auto result = analysis::zero_one_oracle(comparators, perm);
      ++report.trials;
      if (!result.agree) {
        std::ostringstream out;
        out << "input " << keys_string(perm) << " trace " << t << ": input "
            << (result.sorts_input ? "sorted" : "unsorted") << ", projections "
            << (result.sorts_all_projections ? "sorted" : "unsorted");
        report.fail(out.str());
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

OracleReport check_inversion_trace(const graph::PairWeightSpec& spec, std::uint64_t steps,
                                   std::uint64_t seed) {
  const graph::EdgeSampler sampler(spec);
  const Index n = spec.n;
  OracleReport report{"inversions", n, steps, 0, std::nullopt};
  Rng rng(seed);
  engine::SortState state(random_permutation(n, rng));
  std::uint64_t before = analysis::inversions(state.keys());
  for (std::uint64_t step = 1; step <= steps; ++step) {
    if (state.is_sorted()) {
      state = engine::SortState(random_permutation(n, rng));
      before = analysis::inversions(state.keys());
    }
    const Pair e = sampler.sample(rng);
    const bool swapped = state.compare_and_sort(e.first, e.second);
    const std::uint64_t after = analysis::inversions(state.keys());
    const bool ok = swapped ? after < before : after == before;
    if (!ok) {
      std::ostringstream out;
      out << "step " << step << " pair (" << e.first << "," << e.second << ") "
          << (swapped ? "swap" : "no swap") << ": inversions " << before << " -> " << after;
      report.fail(out.str());
    }
    before = after;
  }
  return report;
}

OracleReport check_level_trace(const graph::PairWeightSpec& spec, std::uint64_t steps,
                               std::uint64_t seed) {
  const Index n = spec.n;
  if (!is_power_of_two(n) || n < 4) {
    throw std::invalid_argument("level trace needs a power-of-two n >= 4");
  }
  const graph::EdgeSampler sampler(spec);
  const unsigned levels = floor_log2(n);
  OracleReport report{"levels", n, steps, 0, std::nullopt};
  Rng rng(seed);

  auto omega_mask = [&](std::span<const Key> x) {
    std::vector<bool> mask(levels + 2);
    for (unsigned r = 0; r <= levels + 1; ++r) mask[r] = analysis::in_omega(x, r);
    return mask;
  };

  engine::SortState state(random_balanced(n, rng));
  auto counts = analysis::misplaced_counts(state.keys());
  auto omega = omega_mask(state.keys());
  for (std::uint64_t step = 1; step <= steps; ++step) {
    if (state.is_sorted()) {
      state = engine::SortState(random_balanced(n, rng));
      counts = analysis::misplaced_counts(state.keys());
      omega = omega_mask(state.keys());
    }
    const Pair e = sampler.sample(rng);
    state.compare_and_sort(e.first, e.second);
    const auto next_counts = analysis::misplaced_counts(state.keys());
    const auto next_omega = omega_mask(state.keys());

    std::ostringstream problem;
    for (unsigned r = 0; r <= levels + 1; ++r) {
      if (omega[r] && !next_omega[r]) problem << " left Omega_" << r << ';';
    }
    for (std::size_t k = 0; k < counts.cumulative_zeros.size(); ++k) {
      if (next_counts.cumulative_zeros[k] > counts.cumulative_zeros[k]) {
        problem << " M0_<" << k + 1 << " rose;";
      }
      if (next_counts.cumulative_ones[k] > counts.cumulative_ones[k]) {
        problem << " M1_<" << k + 1 << " rose;";
      }
    }
    if (const std::string text = problem.str(); !text.empty()) {
      std::ostringstream out;
      out << "step " << step << " pair (" << e.first << "," << e.second << "):" << text;
      report.fail(out.str());
    }
    counts = next_counts;
    omega = next_omega;
  }
  return report;
}

OracleReport check_lift(Index n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("lift check needs n >= 1");
  OracleReport report{"lift", n, trials, 0, std::nullopt};
  Rng rng(seed);
  std::bernoulli_distribution bit(0.5);
  const Index half = Index{1} << ceil_log2(n);

  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<Key> x(n);
    for (Key& v : x) v = bit(rng) ? 1 : 0;
    std::vector<Key> lifted = analysis::lift(x);
    const Index offset = analysis::lift_offset(x);

    std::ostringstream problem;
    const auto ones = static_cast<Index>(std::count(lifted.begin(), lifted.end(), Key{1}));
    if (lifted.size() != 2 * half) problem << " length " << lifted.size() << ';';
    if (ones * 2 != lifted.size()) problem << " unbalanced;";
    if (offset + n > lifted.size() ||
        !std::equal(x.begin(), x.end(), lifted.begin() + static_cast<std::ptrdiff_t>(offset))) {
      problem << " window mismatch;";
    }

    // Comparators anywhere on the lifted range: the padding must stay put
    // and the window must evolve exactly as x under the pairs inside it.
    if (n >= 2 && problem.str().empty()) {
      const auto comparators = random_comparators(lifted.size(), 4 * lifted.size(), rng);
      std::vector<Pair> inside;
      for (const Pair& c : comparators) {
        if (c.first >= offset && c.second < offset + n) {
          inside.push_back({c.first - offset, c.second - offset});
        }
      }
      analysis::apply_comparators(lifted, comparators);
      analysis::apply_comparators(x, inside);
      if (!std::equal(x.begin(), x.end(), lifted.begin() + static_cast<std::ptrdiff_t>(offset))) {
        problem << " window diverged;";
      }
      const bool pad_ok =
          std::all_of(lifted.begin(), lifted.begin() + static_cast<std::ptrdiff_t>(offset),
                      [](Key v) { return v == 0; }) &&
          std::all_of(lifted.begin() + static_cast<std::ptrdiff_t>(offset + n), lifted.end(),
                      [](Key v) { return v == 1; });
      if (!pad_ok) problem << " padding moved;";
      if (graphsort::is_sorted(x) != graphsort::is_sorted(lifted)) {
        problem << " sortedness differs;";
      }
    }
    if (const std::string text = problem.str(); !text.empty()) {
      report.fail("trial " + std::to_string(t) + ":" + text);
    }
  }
  return report;
}

OracleReport check_recurrence(unsigned max_levels) {
  OracleReport report{"recurrence", Index{1} << max_levels, max_levels, 0, std::nullopt};
  for (unsigned levels = 1; levels <= max_levels; ++levels) {
    const auto result = analysis::recurrence_bound_report(levels);
    if (!result.holds) {
      const auto& v = *result.first_violation;
      std::ostringstream out;
      out << "N=" << levels << " r=" << v.r << " k=" << v.k << " m=" << v.value
          << " bound=" << v.bound;
      report.fail(out.str());
    }
  }
  return report;
}

}  // namespace graphsort::harness
