#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphsort/types.hpp"

namespace graphsort::analysis {

/// Replaces the k largest entries of x by 1 and the rest by 0. Ties go to
/// the larger index first, so the result is deterministic.
std::vector<Key> threshold_projection(std::span<const Key> x, Index k);

/// Applies a fixed comparator sequence in place.
void apply_comparators(std::span<Key> keys, std::span<const Pair> comparators);

struct ZeroOneReport {
  bool agree = true;
  bool sorts_input = false;
  bool sorts_all_projections = false;
  /// Smallest k whose projection is left unsorted, if any.
  std::optional<Index> first_unsorted_projection;
};

/// Runs the comparator sequence on x and on every threshold projection
/// x_(0..n), and checks that x ends sorted exactly when all projections do.
/// With repeated keys, projections that split a group of equal keys are
/// skipped: whether they end sorted depends on the tie rule, not on x.
ZeroOneReport zero_one_oracle(std::span<const Pair> comparators, std::span<const Key> x);

/// Pads a 0-1 sequence with k ones to balanced length 2^(ceil(lg n) + 1):
/// 2^ceil(lg n) - n + k leading zeros and 2^ceil(lg n) - k trailing ones.
std::vector<Key> lift(std::span<const Key> x);

/// Leading zeros that lift() prepends.
Index lift_offset(std::span<const Key> x);

}  // namespace graphsort::analysis
