#pragma once

#include <optional>

namespace graphsort::analysis {

struct RecurrenceViolation {
  unsigned r = 0;
  unsigned k = 0;
  double value = 0.0;  // m_k^r
  double bound = 0.0;  // 2^-(r - 3k) n
};

struct RecurrenceReport {
  unsigned levels = 0;  // N
  bool holds = true;
  std::optional<RecurrenceViolation> first_violation;
  /// max over (r, k) of m_k^r / bound
  double worst_ratio = 0.0;
};

/// Iterates m_k^r = min(n, m_k^{r-1}/3 + 2 sum_{l<k} m_l^{r-1}) from m_k^0 = n,
/// n = 2^N, for k = 1..N and r = 1..10N, and compares every iterate with
/// 2^-(r-3k) n. Requires 1 <= N <= 40.
RecurrenceReport recurrence_bound_report(unsigned levels);

inline bool recurrence_bound_check(unsigned levels) {
  return recurrence_bound_report(levels).holds;
}

}  // namespace graphsort::analysis
