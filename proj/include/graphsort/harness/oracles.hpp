#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graphsort/graph/weights.hpp"

namespace graphsort::harness {

/// {check, n, trials, failures, firstCounterexample}
struct OracleReport {
  std::string check;
  Index n = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const { return failures == 0; }
  void fail(std::string counterexample);
};

std::string to_json(const OracleReport& report);

/// Every permutation of [n] against `traces` random comparator sequences of
/// length `trace_length`.
OracleReport check_zero_one_principle(Index n, std::uint64_t traces, Index trace_length,
                                      std::uint64_t seed);

/// Records `steps` comparisons of the sorter from a random permutation and
/// checks that every swap lowers the inversion count by at least one and
/// every non-swap leaves it unchanged. Restarts from a fresh permutation
/// whenever the array sorts.
OracleReport check_inversion_trace(const graph::PairWeightSpec& spec, std::uint64_t steps,
                                   std::uint64_t seed);

/// Same, from random balanced 0-1 inputs (n a power of two): Omega_r
/// membership is never lost and M_{<k}^0, M_{<k}^1 never increase.
OracleReport check_level_trace(const graph::PairWeightSpec& spec, std::uint64_t steps,
                               std::uint64_t seed);

/// Lifts random 0-1 sequences of length n and checks balance, length and
/// the embedded window; then applies random comparators over the whole
/// lifted range and checks that the padding never moves and the window
/// tracks x under the comparators that fall inside it.
OracleReport check_lift(Index n, std::uint64_t trials, std::uint64_t seed);

/// recurrence_bound_check for N = 1..max_levels; trials counts values of N.
OracleReport check_recurrence(unsigned max_levels);

}  // namespace graphsort::harness
