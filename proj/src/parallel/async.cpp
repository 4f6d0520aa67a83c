#include "graphsort/parallel/async.hpp"

#include <atomic>
#include <barrier>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "graphsort/engine/sequential.hpp"

namespace graphsort::parallel {
namespace {

Rng worker_stream(std::uint64_t seed, unsigned worker) {
  return Rng(mix64(seed ^ mix64(0x5eedULL + worker)));
}

void fetch_max(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t current = target.load(std::memory_order_relaxed);
  while (current < value && !target.compare_exchange_weak(current, value)) {
  }
}

RunStats base_stats(Index n, const char* name) {
  RunStats stats;
  stats.sorter = name;
  stats.n = n;
  return stats;
}

void finish_stats(RunStats& stats, std::span<const Key> keys,
                  std::chrono::steady_clock::time_point start) {
  stats.sorted = graphsort::is_sorted(keys);
  stats.status = stats.sorted ? RunStatus::Sorted : RunStatus::BudgetExhausted;
  stats.terminal_hash = hash_keys(keys);
  stats.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
}

AsyncRun run_atomic(std::vector<Key> initial, const graph::EdgeSampler& sampler,
                    const engine::FaultModel& fault, const AsyncOptions& options,
                    std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const Index n = initial.size();
  const unsigned workers = options.workers;

  std::vector<std::atomic<Key>> keys(n);
  for (Index i = 0; i < n; ++i) keys[i].store(initial[i], std::memory_order_relaxed);
  std::vector<std::mutex> locks(n);
  std::atomic<std::uint64_t> ticket{0};
  std::atomic<std::uint64_t> last_swap{0};
  std::atomic<std::uint64_t> epoch{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> pause{false};
  std::atomic<unsigned> idle{0};  // parked or exited workers
  std::vector<std::uint64_t> done(workers, 0), swaps(workers, 0);

  auto scan_sorted = [&] {
    Key previous = keys[0].load(std::memory_order_relaxed);
    for (Index i = 1; i < n; ++i) {
      const Key current = keys[i].load(std::memory_order_relaxed);
      if (previous > current) return false;
      previous = current;
    }
    return true;
  };

  auto worker = [&](unsigned w) {
    Rng rng = worker_stream(options.seed, w);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const bool faulty = !fault.always_succeeds();
    while (!stop.load()) {
      if (pause.load()) {
        idle.fetch_add(1);
        idle.notify_all();
        pause.wait(true);
        idle.fetch_sub(1);
        continue;
      }
      const Pair pair = sampler.sample(rng);
      const bool acts = !faulty || coin(rng) < fault.success_probability(pair.first, pair.second);
      std::uint64_t t = 0;
      {
        std::lock_guard low(locks[pair.first]);
        std::lock_guard high(locks[pair.second]);
        t = ticket.fetch_add(1);
        if (t >= budget) {
          stop.store(true);
          break;
        }
        ++done[w];
        if (acts) {
          const Key a = keys[pair.first].load(std::memory_order_relaxed);
          const Key b = keys[pair.second].load(std::memory_order_relaxed);
          if (a > b) {
            keys[pair.first].store(b, std::memory_order_relaxed);
            keys[pair.second].store(a, std::memory_order_relaxed);
            ++swaps[w];
            fetch_max(last_swap, t + 1);
          }
        }
      }
      if ((t + 1) % n == 0) {
        epoch.fetch_add(1);
        epoch.notify_one();
      }
    }
    idle.fetch_add(1);
    idle.notify_all();
    epoch.fetch_add(1);
    epoch.notify_one();
  };

  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker, w);

  std::uint64_t seen = 0;
  while (true) {
    epoch.wait(seen);
    seen = epoch.load();
    if (stop.load() || idle.load() == workers) break;
    if (!scan_sorted()) continue;
    // Optimistic scan looked sorted; confirm with every worker parked.
    pause.store(true);
    for (unsigned v = idle.load(); v != workers; v = idle.load()) idle.wait(v);
    const bool sorted = scan_sorted();
    if (sorted) stop.store(true);
    pause.store(false);
    pause.notify_all();
    if (sorted) break;
  }
  threads.clear();  // join

  AsyncRun run;
  run.keys.resize(n);
  for (Index i = 0; i < n; ++i) run.keys[i] = keys[i].load();
  RunStats& stats = run.stats;
  stats = base_stats(n, "async-atomic");
  for (unsigned w = 0; w < workers; ++w) {
    stats.attempts += done[w];
    stats.swaps += swaps[w];
  }
  stats.per_worker = std::move(done);
  finish_stats(stats, run.keys, start);
  stats.comparisons = stats.sorted ? last_swap.load() : stats.attempts;
  return run;
}

AsyncRun run_mark_round(std::vector<Key> initial, const graph::EdgeSampler& sampler,
                        const engine::FaultModel& fault, const AsyncOptions& options,
                        std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const Index n = initial.size();
  const unsigned workers = options.workers;
  if (workers > n / 4) throw std::invalid_argument("run_async: MarkRound needs workers <= n/4");

  std::vector<Key> keys = std::move(initial);
  std::vector<std::atomic<std::uint32_t>> marks(n);
  std::vector<std::atomic<int>> owner(n);
  for (auto& o : owner) o.store(-1, std::memory_order_relaxed);

  std::vector<std::uint64_t> proposed(workers, 0), compared(workers, 0), swapped(workers, 0);
  std::atomic<std::uint64_t> round_retained{0};
  std::atomic<std::uint64_t> violations{0};
  std::uint64_t rounds = 0, proposals = 0, retained = 0, comparisons_at_sort = 0;
  bool stop = false;
  bool sorted_seen = false;
  unsigned phase = 0;

  // Runs once per phase; only the end of the third phase closes a round.
  auto on_phase = [&]() noexcept {
    if (++phase % 3 != 0) return;
    ++rounds;
    proposals += workers;
    retained += round_retained.exchange(0);
    if (graphsort::is_sorted(keys)) {
      sorted_seen = true;
      comparisons_at_sort = retained;
      stop = true;
    } else if (proposals + workers > budget) {
      stop = true;
    }
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(workers), on_phase);

  auto worker = [&](unsigned w) {
    Rng rng = worker_stream(options.seed, w);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const bool faulty = !fault.always_succeeds();
    while (!stop) {
      const Pair pair = sampler.sample(rng);
      ++proposed[w];
      marks[pair.first].fetch_add(1);
      marks[pair.second].fetch_add(1);
      sync.arrive_and_wait();

      const bool keep = marks[pair.first].load() == 1 && marks[pair.second].load() == 1;
      sync.arrive_and_wait();

      if (keep) {
        int expected = -1;
        bool exclusive = owner[pair.first].compare_exchange_strong(expected, int(w));
        expected = -1;
        exclusive = owner[pair.second].compare_exchange_strong(expected, int(w)) && exclusive;
        if (!exclusive) violations.fetch_add(1);
        ++compared[w];
        round_retained.fetch_add(1);
        if (!faulty || coin(rng) < fault.success_probability(pair.first, pair.second)) {
          if (keys[pair.first] > keys[pair.second]) {
            std::swap(keys[pair.first], keys[pair.second]);
            ++swapped[w];
          }
        }
        owner[pair.first].store(-1);
        owner[pair.second].store(-1);
      }
      marks[pair.first].fetch_sub(1);
      marks[pair.second].fetch_sub(1);
      sync.arrive_and_wait();
    }
  };

  if (!graphsort::is_sorted(keys) && budget >= workers) {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker, w);
  }

  AsyncRun run;
  run.keys = std::move(keys);
  run.proposals = proposals;
  run.retained = retained;
  run.protocol_violations = violations.load();
  RunStats& stats = run.stats;
  stats = base_stats(n, "async-mark");
  stats.rounds = rounds;
  stats.attempts = proposals;
  for (unsigned w = 0; w < workers; ++w) stats.swaps += swapped[w];
  stats.per_worker = std::move(compared);
  finish_stats(stats, run.keys, start);
  stats.comparisons = sorted_seen ? comparisons_at_sort : retained;
  return run;
}

}  // namespace

AsyncRun run_async(std::vector<Key> initial, const graph::EdgeSampler& sampler,
                   const engine::FaultModel& fault, const AsyncOptions& options) {
  if (options.workers == 0) throw std::invalid_argument("run_async: worker count must be positive");
  if (initial.size() != sampler.n()) {
    throw std::invalid_argument("run_async: input length differs from sampler n");
  }
  const std::uint64_t budget =
      options.budget != 0 ? options.budget : engine::default_max_steps(sampler.spec());

  if (graphsort::is_sorted(initial)) {
    AsyncRun run;
    run.stats = base_stats(initial.size(), options.protocol == Protocol::Atomic ? "async-atomic"
                                                                                : "async-mark");
    run.stats.per_worker.assign(options.workers, 0);
    run.keys = std::move(initial);
    finish_stats(run.stats, run.keys, std::chrono::steady_clock::now());
    return run;
  }
  if (options.protocol == Protocol::Atomic) {
    return run_atomic(std::move(initial), sampler, fault, options, budget);
  }
  return run_mark_round(std::move(initial), sampler, fault, options, budget);
}

}  // namespace graphsort::parallel
