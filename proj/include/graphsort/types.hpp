#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

namespace graphsort {

using Index = std::size_t;
using Key = std::uint64_t;

/// Random stream used by every sampler and engine. Each run owns one.
using Rng = std::mt19937_64;

/// Unordered position pair, stored with first < second.
struct Pair {
  Index first = 0;
  Index second = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

inline Pair make_pair_ordered(Index a, Index b) {
  return a < b ? Pair{a, b} : Pair{b, a};
}

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-run seed for (masterSeed, n, trial). Chained mixing so that distinct
/// triples map to well-separated streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n,
                                    std::uint64_t trial) {
  return mix64(mix64(mix64(master) ^ n) ^ trial);
}

constexpr bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

/// floor(log2(x)) for x >= 1.
constexpr unsigned floor_log2(std::uint64_t x) {
  unsigned r = 0;
  while (x >>= 1) ++r;
  return r;
}

/// ceil(log2(x)) for x >= 1.
constexpr unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : floor_log2(x - 1) + 1;
}

}  // namespace graphsort
