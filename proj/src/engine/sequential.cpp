#include "graphsort/engine/sequential.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace graphsort::engine {
namespace {

class TraceRecorder {
 public:
  explicit TraceRecorder(TraceOptions options) : options_(options) {
    if (options_.mode == TraceMode::Ring && options_.ring_capacity == 0) {
      throw std::invalid_argument("ring trace needs a positive capacity");
    }
  }

  bool enabled() const { return options_.mode != TraceMode::Off; }

  void record(const TraceEvent& event) {
    if (options_.mode == TraceMode::Full || events_.size() < options_.ring_capacity) {
      events_.push_back(event);
      return;
    }
    events_[head_] = event;
    head_ = (head_ + 1) % events_.size();
  }

  std::vector<TraceEvent> finish() && {
    std::rotate(events_.begin(), events_.begin() + static_cast<std::ptrdiff_t>(head_),
                events_.end());
    return std::move(events_);
  }

 private:
  TraceOptions options_;
  std::vector<TraceEvent> events_;
  std::size_t head_ = 0;
};

}  // namespace

std::uint64_t default_max_steps(const graph::PairWeightSpec& spec) {
  const std::uint64_t n = spec.n;
  const std::uint64_t lg = std::max(1u, ceil_log2(n));
  if (std::holds_alternative<graph::Harmonic>(spec.family)) return 64 * n * lg * lg;
  return 64 * n * n * lg;
}

SequentialRun run_sequential(std::vector<Key> initial, const graph::EdgeSampler& sampler,
                             const FaultModel& fault, Rng& rng, std::uint64_t max_steps,
                             TraceOptions trace) {
  if (initial.empty()) throw std::invalid_argument("run_sequential: empty input");
  if (max_steps == 0) throw std::invalid_argument("run_sequential: max_steps must be positive");
  if (initial.size() != sampler.n()) {
    throw std::invalid_argument("run_sequential: input length differs from sampler n");
  }

  const auto start = std::chrono::steady_clock::now();
  SortState state(std::move(initial));
  TraceRecorder recorder(trace);
  std::exponential_distribution<double> holding(sampler.total_weight());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const bool faulty = !fault.always_succeeds();

  while (!state.is_sorted() && state.steps() < max_steps) {
    state.advance_time(holding(rng));
    const Pair pair = sampler.sample(rng);
    bool swapped = false;
    if (faulty && coin(rng) >= fault.success_probability(pair.first, pair.second)) {
      state.count_skipped_comparison();
    } else {
      swapped = state.compare_and_sort(pair.first, pair.second);
    }
    if (recorder.enabled()) recorder.record({state.steps(), pair, swapped, state.sim_time()});
  }

  SequentialRun run;
  RunStats& stats = run.stats;
  stats.sorter = graph::family_name(sampler.spec());
  stats.n = state.n();
  stats.comparisons = state.steps();
  stats.attempts = state.steps();
  stats.swaps = state.swaps();
  stats.sim_time = state.sim_time();
  run.keys = std::move(state).take_keys();
  stats.sorted = graphsort::is_sorted(run.keys);
  stats.status = stats.sorted ? RunStatus::Sorted : RunStatus::BudgetExhausted;
  stats.terminal_hash = hash_keys(run.keys);
  stats.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  run.trace = std::move(recorder).finish();
  return run;
}

}  // namespace graphsort::engine
