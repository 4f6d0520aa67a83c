#include "graphsort/analysis/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphsort::analysis {
namespace {

// ceil(n (1/2 + 2^-k)) and ceil(n (1/2 - 2^-k)) for n = 2^N, clamped to
// [0, n]. For k > N the offset n 2^-k is a proper fraction.
Index ceil_half_plus(Index n, unsigned k) {
  const unsigned levels = floor_log2(n);
  const Index offset = k <= levels ? (n >> k) : 1;
  return std::min(n, n / 2 + offset);
}

Index ceil_half_minus(Index n, unsigned k) {
  const unsigned levels = floor_log2(n);
  if (k > levels) return n / 2;
  const Index offset = n >> k;
  return offset >= n / 2 ? 0 : n / 2 - offset;
}

void require_grid(Index n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw std::invalid_argument("interval family: n must be a power of two >= 2");
  }
}

PositionRange make_range(Index begin, Index end) { return {begin, std::max(begin, end)}; }

}  // namespace

PositionRange level_interval(Index n, unsigned k, Side side) {
  require_grid(n);
  if (k < 1) throw std::invalid_argument("level_interval: k must be >= 1");
  return side == Side::Zero ? make_range(ceil_half_minus(n, k), ceil_half_minus(n, k + 1))
                            : make_range(ceil_half_plus(n, k + 1), ceil_half_plus(n, k));
}

PositionRange below_level(Index n, unsigned k, Side side) {
  require_grid(n);
  return side == Side::Zero ? make_range(0, ceil_half_minus(n, k))
                            : make_range(ceil_half_plus(n, k), n);
}

PositionRange at_or_above(Index n, unsigned k, Side side) {
  require_grid(n);
  return side == Side::Zero ? make_range(ceil_half_minus(n, k), n / 2)
                            : make_range(n / 2, ceil_half_plus(n, k));
}

void require_balanced_zero_one(std::span<const Key> x) {
  require_grid(x.size());
  Index ones = 0;
  for (Key v : x) {
    if (v > 1) throw std::invalid_argument("expected a 0-1 sequence");
    ones += v;
  }
  if (2 * ones != x.size()) throw std::invalid_argument("expected a balanced 0-1 sequence");
}

MisplacedCounts misplaced_counts(std::span<const Key> x) {
  require_balanced_zero_one(x);
  const Index n = x.size();
  const unsigned levels = floor_log2(n);

  auto count = [&](PositionRange range, Key value) {
    std::uint64_t c = 0;
    for (Index i = range.begin; i < range.end; ++i) c += x[i] == value ? 1 : 0;
    return c;
  };

  MisplacedCounts counts;
  for (unsigned k = 1; k <= levels; ++k) {
    counts.zeros_in_upper.push_back(count(level_interval(n, k, Side::One), 0));
    counts.ones_in_lower.push_back(count(level_interval(n, k, Side::Zero), 1));
  }
  for (unsigned k = 1; k <= levels + 1; ++k) {
    counts.cumulative_zeros.push_back(count(below_level(n, k, Side::One), 0));
    counts.cumulative_ones.push_back(count(below_level(n, k, Side::Zero), 1));
  }
  counts.misplaced = count({n / 2, n}, 0);
  counts.misplaced_ones = count({0, n / 2}, 1);
  return counts;
}

bool in_omega(std::span<const Key> x, unsigned r) {
  require_balanced_zero_one(x);
  const Index n = x.size();
  const Index zero_limit = r == 0 ? n : ceil_half_plus(n, r);
  const Index one_start = r == 0 ? 0 : ceil_half_minus(n, r);
  for (Index i = 0; i < n; ++i) {
    if (x[i] == 0 && i >= zero_limit) return false;
    if (x[i] == 1 && i < one_start) return false;
  }
  return true;
}

}  // namespace graphsort::analysis
