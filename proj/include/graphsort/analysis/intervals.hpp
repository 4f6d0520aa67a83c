#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphsort/types.hpp"

namespace graphsort::analysis {

// Dyadic level intervals on the rescaled grid {0, 1/n, ..., 1 - 1/n},
// n a power of two. Position i corresponds to the rational i/n and all
// membership tests are done in exact integer arithmetic.
//
//   I_k^0     = [1/2 - 2^-k, 1/2 - 2^-(k+1))
//   I_k^1     = [1/2 + 2^-(k+1), 1/2 + 2^-k)
//   I_{<k}^0  = [0, 1/2 - 2^-k)        I_{>=k}^0 = [1/2 - 2^-k, 1/2)
//   I_{<k}^1  = [1/2 + 2^-k, 1)        I_{>=k}^1 = [1/2, 1/2 + 2^-k)

enum class Side { Zero, One };

/// Half-open integer position range [begin, end).
struct PositionRange {
  Index begin = 0;
  Index end = 0;

  Index size() const { return end > begin ? end - begin : 0; }
  bool contains(Index i) const { return begin <= i && i < end; }
  friend bool operator==(const PositionRange&, const PositionRange&) = default;
};

PositionRange level_interval(Index n, unsigned k, Side side);
PositionRange below_level(Index n, unsigned k, Side side);     // I_{<k}
PositionRange at_or_above(Index n, unsigned k, Side side);     // I_{>=k}

struct MisplacedCounts {
  /// zeros_in_upper[k-1] = M_k^0 = #zeros in I_k^1, k = 1..lg n.
  std::vector<std::uint64_t> zeros_in_upper;
  /// ones_in_lower[k-1] = M_k^1 = #ones in I_k^0.
  std::vector<std::uint64_t> ones_in_lower;
  /// cumulative_zeros[k-1] = M_{<k}^0 for k = 1..lg n + 1.
  std::vector<std::uint64_t> cumulative_zeros;
  std::vector<std::uint64_t> cumulative_ones;
  /// Zeros at positions >= n/2 and ones at positions < n/2.
  std::uint64_t misplaced = 0;
  std::uint64_t misplaced_ones = 0;

  std::uint64_t level(unsigned k) const {
    return zeros_in_upper.at(k - 1) + ones_in_lower.at(k - 1);
  }
};

/// Requires a balanced 0-1 array of power-of-two length.
MisplacedCounts misplaced_counts(std::span<const Key> x);

/// Membership in the absorbing set Omega_r: every 0 in [0, 1/2) u I_{>=r}^1
/// and every 1 in [1/2, 1) u I_{>=r}^0. Omega_0 is everything.
bool in_omega(std::span<const Key> x, unsigned r);

/// Throws std::invalid_argument unless x is 0-1, balanced, and of
/// power-of-two length >= 2.
void require_balanced_zero_one(std::span<const Key> x);

}  // namespace graphsort::analysis
