#pragma once

#include <cstdint>

namespace graphsort::analysis {

/// Expected time to collect m rate-1 coupons: H_m.
double coupon_expectation(std::uint64_t m);

/// Union bound m e^{-t} on Pr(some coupon still missing at time t).
double coupon_tail(std::uint64_t m, double t);

}  // namespace graphsort::analysis
