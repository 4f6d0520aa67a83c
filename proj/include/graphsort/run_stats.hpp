#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphsort/types.hpp"

namespace graphsort {

enum class RunStatus { Sorted, BudgetExhausted };

/// Measurements of one run. `comparisons` is the sorting time counted in
/// comparisons (for runs that sort); `attempts` additionally counts work
/// performed after that point or discarded by a protocol.
struct RunStats {
  std::string sorter;
  Index n = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  std::uint64_t rounds = 0;
  double sim_time = 0.0;
  bool sorted = false;
  std::int64_t wall_ns = 0;

  RunStatus status = RunStatus::BudgetExhausted;
  std::uint64_t attempts = 0;
  std::uint64_t terminal_hash = 0;
  /// Final keys are a rearrangement of the input (checked by the harness).
  bool value_conserving = true;
  std::vector<std::uint64_t> per_worker;
};

/// Independent left-to-right scan; does not trust any cached state.
bool is_sorted(std::span<const Key> keys);

/// FNV-1a over the key bytes.
std::uint64_t hash_keys(std::span<const Key> keys);

}  // namespace graphsort
