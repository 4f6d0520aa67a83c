#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphsort/types.hpp"

namespace graphsort::engine {

/// The array under sort plus its step, swap, round and simulated-time
/// counters. Sortedness is tracked through the number of descents
/// (positions k with keys[k] > keys[k+1]) so that it is O(1) to query.
class SortState {
 public:
  explicit SortState(std::vector<Key> keys);

  /// Compare-exchange on positions i < j. Returns true iff a swap happened.
  bool compare_and_sort(Index i, Index j);

  /// A comparison attempt that was not carried out (faulty comparator).
  void count_skipped_comparison() { ++steps_; }

  void advance_time(double dt) { sim_time_ += dt; }
  void count_round() { ++rounds_; }

  bool is_sorted() const { return descents_ == 0; }

  Index n() const { return keys_.size(); }
  std::span<const Key> keys() const { return keys_; }
  std::vector<Key> take_keys() && { return std::move(keys_); }
  std::uint64_t steps() const { return steps_; }
  std::uint64_t swaps() const { return swaps_; }
  std::uint64_t rounds() const { return rounds_; }
  double sim_time() const { return sim_time_; }

 private:
  std::size_t descents_near(Index i, Index j) const;

  std::vector<Key> keys_;
  std::size_t descents_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t swaps_ = 0;
  std::uint64_t rounds_ = 0;
  double sim_time_ = 0.0;
};

}  // namespace graphsort::engine
