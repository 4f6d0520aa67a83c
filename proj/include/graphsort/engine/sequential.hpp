#pragma once

#include <cstdint>
#include <vector>

#include "graphsort/engine/fault.hpp"
#include "graphsort/engine/sort_state.hpp"
#include "graphsort/graph/sampler.hpp"
#include "graphsort/run_stats.hpp"

namespace graphsort::engine {

struct TraceEvent {
  std::uint64_t step = 0;  // 1-based comparison index
  Pair pair;
  bool swapped = false;
  double sim_time = 0.0;
};

enum class TraceMode { Off, Full, Ring };

struct TraceOptions {
  TraceMode mode = TraceMode::Off;
  std::size_t ring_capacity = 4096;  // Ring only
};

struct SequentialRun {
  RunStats stats;
  std::vector<Key> keys;
  std::vector<TraceEvent> trace;  // oldest first
};

/// 64 n ceil(lg n)^2 for harmonic, 64 n^2 ceil(lg n) otherwise.
std::uint64_t default_max_steps(const graph::PairWeightSpec& spec);

/// Draw-and-compare loop. Every draw advances the simulated clock by an
/// Exp(w(E)) holding time and counts as one comparison whether or not the
/// faulty comparator acts. Stops when sorted or after max_steps draws.
SequentialRun run_sequential(std::vector<Key> initial, const graph::EdgeSampler& sampler,
                             const FaultModel& fault, Rng& rng, std::uint64_t max_steps,
                             TraceOptions trace = {});

}  // namespace graphsort::engine
