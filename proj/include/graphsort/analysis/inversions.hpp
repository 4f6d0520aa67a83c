#pragma once

#include <cstdint>
#include <span>

#include "graphsort/types.hpp"

namespace graphsort::analysis {

/// Number of pairs i < j with x[i] > x[j], by merge counting in O(n log n).
std::uint64_t inversions(std::span<const Key> x);

}  // namespace graphsort::analysis
