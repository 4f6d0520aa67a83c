#pragma once

#include <cstdint>
#include <vector>

#include "graphsort/engine/fault.hpp"
#include "graphsort/graph/sampler.hpp"
#include "graphsort/run_stats.hpp"

namespace graphsort::parallel {

enum class Protocol {
  /// Free-running workers; each compare-exchange holds both position locks,
  /// acquired lower index first.
  Atomic,
  /// Lock-step rounds: every worker marks the endpoints of its proposal,
  /// then sorts it only if no other worker marked either endpoint.
  MarkRound,
};

struct AsyncOptions {
  unsigned workers = 1;
  Protocol protocol = Protocol::Atomic;
  /// Maximum comparison attempts (proposals for MarkRound); 0 selects
  /// engine::default_max_steps of the sampler's spec.
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

struct AsyncRun {
  RunStats stats;
  std::vector<Key> keys;
  std::uint64_t proposals = 0;  // MarkRound: all proposals, including discarded
  std::uint64_t retained = 0;   // MarkRound: proposals that passed the mark check
  std::uint64_t protocol_violations = 0;
};

/// Runs the sorter on `workers` OS threads sharing one key array.
///
/// For Atomic, stats.comparisons is the index of the comparison that
/// performed the final swap in the lock-induced linear order, i.e. the
/// sorting time in comparisons; stats.attempts counts every comparison the
/// workers made before the coordinator confirmed sortedness. The
/// coordinator rescans the array each time n more comparisons have been
/// issued and confirms a sorted scan with all workers parked.
///
/// For MarkRound, stats.comparisons counts sorted (retained) proposals up to
/// the round that sorted the array, stats.attempts counts all proposals and
/// stats.rounds the synchronous rounds.
///
/// stats.per_worker holds each worker's comparison count.
AsyncRun run_async(std::vector<Key> initial, const graph::EdgeSampler& sampler,
                   const engine::FaultModel& fault, const AsyncOptions& options);

}  // namespace graphsort::parallel
