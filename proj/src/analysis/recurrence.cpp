#include "graphsort/analysis/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace graphsort::analysis {

RecurrenceReport recurrence_bound_report(unsigned levels) {
  if (levels < 1 || levels > 40) throw std::invalid_argument("recurrence check needs 1 <= N <= 40");
  const long double n = std::ldexp(1.0L, static_cast<int>(levels));

  RecurrenceReport report;
  report.levels = levels;
  std::vector<long double> m(levels + 1, n), next(levels + 1, 0.0L);  // index k, 1-based
  for (unsigned r = 1; r <= 10 * levels; ++r) {
    long double lower_sum = 0.0L;  // sum_{l<k} m_l^{r-1}
    for (unsigned k = 1; k <= levels; ++k) {
      next[k] = std::min(n, m[k] / 3.0L + 2.0L * lower_sum);
      lower_sum += m[k];
    }
    std::swap(m, next);
    for (unsigned k = 1; k <= levels; ++k) {
      const long double bound = std::ldexp(n, 3 * static_cast<int>(k) - static_cast<int>(r));
      const double ratio = static_cast<double>(m[k] / bound);
      report.worst_ratio = std::max(report.worst_ratio, ratio);
      if (m[k] > bound && report.holds) {
        report.holds = false;
        report.first_violation =
            RecurrenceViolation{r, k, static_cast<double>(m[k]), static_cast<double>(bound)};
      }
    }
  }
  return report;
}

}  // namespace graphsort::analysis
