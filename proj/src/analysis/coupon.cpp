#include "graphsort/analysis/coupon.hpp"

#include <cmath>
#include <stdexcept>

namespace graphsort::analysis {

double coupon_expectation(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("coupon_expectation: m must be positive");
  double h = 0.0;
  for (std::uint64_t i = m; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

double coupon_tail(std::uint64_t m, double t) {
  if (m == 0) throw std::invalid_argument("coupon_tail: m must be positive");
  return static_cast<double>(m) * std::exp(-t);
}

}  // namespace graphsort::analysis
