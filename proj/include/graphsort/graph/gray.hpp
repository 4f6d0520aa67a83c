#pragma once

#include <cstdint>

#include "graphsort/types.hpp"

namespace graphsort::graph {

/// Reflected binary Gray code of i.
constexpr std::uint64_t gray_code(std::uint64_t i) { return i ^ (i >> 1); }

/// Position whose Gray code is g.
constexpr std::uint64_t gray_inverse(std::uint64_t g) {
  std::uint64_t i = g;
  for (unsigned shift = 1; shift < 64; shift <<= 1) i ^= i >> shift;
  return i;
}

/// True iff positions i and j are hypercube neighbours under the Gray
/// relabelling of [n]. Throws for non-power-of-two n, out-of-range indices
/// or i == j.
bool is_gray_edge(Index i, Index j, Index n);

}  // namespace graphsort::graph
