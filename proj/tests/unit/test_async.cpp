#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "graphsort/engine/sequential.hpp"
#include "graphsort/parallel/async.hpp"

using namespace graphsort;
using namespace graphsort::parallel;
using graph::EdgeSampler;
using graph::PairWeightSpec;

namespace {

std::vector<Key> reversed(Index n) {
  std::vector<Key> keys(n);
  std::iota(keys.rbegin(), keys.rend(), Key{1});
  return keys;
}

bool is_permutation_of_1_to_n(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  for (Index i = 0; i < keys.size(); ++i) {
    if (keys[i] != i + 1) return false;
  }
  return true;
}

}  // namespace

TEST(AsyncAtomic, SingleWorkerMatchesSequentialMean) {
  const Index n = 64;
  EdgeSampler sampler(PairWeightSpec::harmonic(n));
  const int trials = 600;
  double seq = 0, atomic = 0;
  Rng rng(1);
  for (int t = 0; t < trials; ++t) {
    seq += static_cast<double>(engine::run_sequential(reversed(n), sampler,
                                                      engine::FaultModel::none(), rng, 1u << 24)
                                   .stats.comparisons);
    AsyncOptions options;
    options.seed = 1000 + t;
    atomic += static_cast<double>(
        run_async(reversed(n), sampler, engine::FaultModel::none(), options).stats.comparisons);
  }
  EXPECT_NEAR(atomic / seq, 1.0, 0.08);
}

TEST(AsyncAtomic, ManyWorkersSortAndConserveValues) {
  const Index n = 256;
  EdgeSampler sampler(PairWeightSpec::harmonic(n));
  for (unsigned workers : {2u, 8u, 32u}) {
    for (int t = 0; t < 10; ++t) {
      AsyncOptions options;
      options.workers = workers;
      options.seed = static_cast<std::uint64_t>(t);
      const auto run = run_async(reversed(n), sampler, engine::FaultModel::none(), options);
      ASSERT_TRUE(run.stats.sorted);
      ASSERT_TRUE(is_sorted(run.keys));
      ASSERT_TRUE(is_permutation_of_1_to_n(run.keys));
      ASSERT_EQ(run.stats.per_worker.size(), workers);
      EXPECT_EQ(std::accumulate(run.stats.per_worker.begin(), run.stats.per_worker.end(),
                                std::uint64_t{0}),
                run.stats.attempts);
      EXPECT_LE(run.stats.comparisons, run.stats.attempts);
      EXPECT_EQ(run.stats.sorter, "async-atomic");
    }
  }
}

TEST(AsyncAtomic, SortedInputStopsImmediately) {
  EdgeSampler sampler(PairWeightSpec::harmonic(32));
  std::vector<Key> keys(32);
  std::iota(keys.begin(), keys.end(), Key{1});
  AsyncOptions options;
  options.workers = 4;
  const auto run = run_async(keys, sampler, engine::FaultModel::none(), options);
  EXPECT_TRUE(run.stats.sorted);
  EXPECT_EQ(run.stats.comparisons, 0u);
}

TEST(AsyncAtomic, BudgetExhaustionIsReported) {
  EdgeSampler sampler(PairWeightSpec::adjacent(128));
  AsyncOptions options;
  options.workers = 4;
  options.budget = 100;
  const auto run = run_async(reversed(128), sampler, engine::FaultModel::none(), options);
  EXPECT_FALSE(run.stats.sorted);
  EXPECT_EQ(run.stats.status, RunStatus::BudgetExhausted);
  EXPECT_TRUE(is_permutation_of_1_to_n(run.keys));
}

TEST(AsyncAtomic, FaultyComparatorsStillSort) {
  EdgeSampler sampler(PairWeightSpec::harmonic(128));
  AsyncOptions options;
  options.workers = 4;
  options.budget = 1u << 24;
  const auto run = run_async(reversed(128), sampler, engine::FaultModel::constant(0.5), options);
  EXPECT_TRUE(run.stats.sorted);
  EXPECT_TRUE(is_permutation_of_1_to_n(run.keys));
}

TEST(AsyncMark, SortsWithoutProtocolViolations) {
  const Index n = 256;
  EdgeSampler sampler(PairWeightSpec::harmonic(n));
  for (unsigned workers : {1u, 8u, 64u}) {
    AsyncOptions options;
    options.workers = workers;
    options.protocol = Protocol::MarkRound;
    options.seed = 7;
    const auto run = run_async(reversed(n), sampler, engine::FaultModel::none(), options);
    EXPECT_TRUE(run.stats.sorted) << workers;
    EXPECT_TRUE(is_permutation_of_1_to_n(run.keys));
    EXPECT_EQ(run.protocol_violations, 0u);
    EXPECT_EQ(run.stats.sorter, "async-mark");
    EXPECT_LE(run.retained, run.proposals);
    EXPECT_GT(run.stats.rounds, 0u);
  }
}

TEST(AsyncMark, DeterministicForFixedSeed) {
  const Index n = 128;
  EdgeSampler sampler(PairWeightSpec::harmonic(n));
  AsyncOptions options;
  options.workers = 16;
  options.protocol = Protocol::MarkRound;
  options.seed = 99;
  const auto a = run_async(reversed(n), sampler, engine::FaultModel::none(), options);
  const auto b = run_async(reversed(n), sampler, engine::FaultModel::none(), options);
  EXPECT_EQ(a.stats.comparisons, b.stats.comparisons);
  EXPECT_EQ(a.stats.rounds, b.stats.rounds);
  EXPECT_EQ(a.proposals, b.proposals);
}

// Each proposal collides with another worker's with probability about
// 4(p-1)/n; at p = n/8 at least half are kept.
TEST(AsyncMark, RetainedFractionAtEighthLoad) {
  const Index n = 512;
  EdgeSampler sampler(PairWeightSpec::harmonic(n));
  AsyncOptions options;
  options.workers = static_cast<unsigned>(n / 8);
  options.protocol = Protocol::MarkRound;
  options.seed = 3;
  const auto run = run_async(reversed(n), sampler, engine::FaultModel::none(), options);
  ASSERT_GT(run.proposals, 0u);
  EXPECT_GE(static_cast<double>(run.retained) / static_cast<double>(run.proposals), 0.5);
}

TEST(Async, RejectsBadOptions) {
  EdgeSampler sampler(PairWeightSpec::harmonic(64));
  AsyncOptions options;
  options.workers = 0;
  EXPECT_THROW(run_async(reversed(64), sampler, engine::FaultModel::none(), options),
               std::invalid_argument);
  options.workers = 17;
  options.protocol = Protocol::MarkRound;
  EXPECT_THROW(run_async(reversed(64), sampler, engine::FaultModel::none(), options),
               std::invalid_argument);
  options.workers = 2;
  EXPECT_THROW(run_async(reversed(32), sampler, engine::FaultModel::none(), options),
               std::invalid_argument);
}
