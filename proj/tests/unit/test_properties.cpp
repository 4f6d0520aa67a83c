// Randomized properties over many generated cases. Each case is derived
// from a fixed seed so failures reproduce; the failing case is printed.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "graphsort/analysis/intervals.hpp"
#include "graphsort/analysis/inversions.hpp"
#include "graphsort/analysis/zero_one.hpp"
#include "graphsort/engine/sequential.hpp"
#include "graphsort/parallel/matching.hpp"

using namespace graphsort;

namespace {

std::vector<Key> random_keys(Index n, Rng& rng, Key range) {
  std::vector<Key> keys(n);
  for (Key& k : keys) k = rng() % range;
  return keys;
}

graph::PairWeightSpec random_spec(Index n, Rng& rng) {
  switch (rng() % 4) {
    case 0: return graph::PairWeightSpec::uniform(n);
    case 1: return graph::PairWeightSpec::adjacent(n);
    case 2: return graph::PairWeightSpec::harmonic(n, 0.5 + (rng() % 8));
    default: {
      std::map<Pair, double> w;
      for (Index i = 0; i + 1 < n; ++i) w[{i, i + 1}] = 1.0 + (rng() % 3);
      w[{0, n - 1}] = 0.25;
      return graph::PairWeightSpec::custom(n, std::move(w));
    }
  }
}

}  // namespace

TEST(Property, SequentialSortsAndConservesValues) {
  Rng meta(2024);
  for (int c = 0; c < 300; ++c) {
    const Index n = 2 + meta() % 40;
    const auto spec = random_spec(n, meta);
    const auto keys = random_keys(n, meta, 1 + meta() % 50);
    graph::EdgeSampler sampler(spec);
    Rng rng(meta());
    const auto run = engine::run_sequential(keys, sampler, engine::FaultModel::none(), rng,
                                            engine::default_max_steps(spec) * 4);
    SCOPED_TRACE("case " + std::to_string(c) + " " + graph::family_name(spec) + " n=" +
                 std::to_string(n));
    ASSERT_TRUE(run.stats.sorted);
    ASSERT_TRUE(is_sorted(run.keys));
    auto a = keys, b = run.keys;
    std::sort(a.begin(), a.end());
    ASSERT_EQ(a, b);
    // Each swap removes at least one inversion.
    ASSERT_LE(run.stats.swaps, analysis::inversions(keys));
    ASSERT_LE(run.stats.swaps, run.stats.comparisons);
  }
}

TEST(Property, AdjacentSwapsEqualInversions) {
  Rng meta(7);
  for (int c = 0; c < 100; ++c) {
    const Index n = 2 + meta() % 30;
    const auto keys = random_keys(n, meta, 1000);
    graph::EdgeSampler sampler(graph::PairWeightSpec::adjacent(n));
    Rng rng(meta());
    const auto run = engine::run_sequential(keys, sampler, engine::FaultModel::none(), rng, 1u << 24);
    ASSERT_EQ(run.stats.swaps, analysis::inversions(keys)) << "case " << c;
  }
}

TEST(Property, SameSeedSameRun) {
  Rng meta(11);
  for (int c = 0; c < 50; ++c) {
    const Index n = 2 + meta() % 64;
    const auto spec = random_spec(n, meta);
    const auto keys = random_keys(n, meta, 100);
    graph::EdgeSampler sampler(spec);
    const std::uint64_t seed = meta();
    Rng r1(seed), r2(seed);
    const auto a = engine::run_sequential(keys, sampler, engine::FaultModel::constant(0.7), r1, 1u << 22);
    const auto b = engine::run_sequential(keys, sampler, engine::FaultModel::constant(0.7), r2, 1u << 22);
    ASSERT_EQ(a.stats.comparisons, b.stats.comparisons);
    ASSERT_EQ(a.stats.sim_time, b.stats.sim_time);
    ASSERT_EQ(a.keys, b.keys);
  }
}

// On distinct keys comparators commute with threshold projections; with
// repeated keys the oracle must still agree.
TEST(Property, ProjectionCommutesWithComparators) {
  Rng rng(5);
  for (int c = 0; c < 500; ++c) {
    const Index n = 1 + rng() % 12;
    std::vector<Key> x(n);
    std::iota(x.begin(), x.end(), Key{0});
    std::shuffle(x.begin(), x.end(), rng);
    std::vector<Pair> trace;
    for (int t = 0; n > 1 && t < 20; ++t) {
      const Index a = rng() % n, b = rng() % n;
      if (a != b) trace.push_back(make_pair_ordered(a, b));
    }
    auto after = x;
    analysis::apply_comparators(after, trace);
    for (Index k = 0; k <= n; ++k) {
      auto projected = analysis::threshold_projection(x, k);
      analysis::apply_comparators(projected, trace);
      ASSERT_EQ(projected, analysis::threshold_projection(after, k)) << "case " << c << " k=" << k;
    }
    ASSERT_TRUE(analysis::zero_one_oracle(trace, x).agree);

    auto repeated = random_keys(n, rng, 3);
    ASSERT_TRUE(analysis::zero_one_oracle(trace, repeated).agree) << "case " << c;
  }
}

TEST(Property, SamplersProduceValidMatchings) {
  Rng rng(9);
  for (Index n = 4; n <= 512; n *= 2) {
    parallel::MatchingSampler structured({parallel::MatchingKind::StructuredPowerOfTwo, n, 0});
    parallel::MatchingSampler thinned({parallel::MatchingKind::ThinnedIid, n, std::max<Index>(1, n / 4)});
    parallel::MatchingSampler dimcut({parallel::MatchingKind::HypercubeDimCut, n, 0});
    for (int s = 0; s < 200; ++s) {
      const auto a = structured.sample(rng);
      ASSERT_EQ(a.pairs.size(), n / 4);
      ASSERT_NO_THROW(parallel::validate_matching(a.pairs, n));
      const auto b = thinned.sample(rng);
      ASSERT_LE(b.pairs.size(), std::max<Index>(1, n / 4));
      ASSERT_NO_THROW(parallel::validate_matching(b.pairs, n));
      const auto c = dimcut.sample(rng);
      ASSERT_EQ(c.pairs.size(), n / 2);
      ASSERT_NO_THROW(parallel::validate_matching(c.pairs, n));
    }
  }
}

TEST(Property, CircularDistance) {
  Rng rng(13);
  for (int c = 0; c < 2000; ++c) {
    const Index n = 2 + rng() % 100;
    const Index i = rng() % n, j = rng() % n;
    const Index d = parallel::circular_distance(n, i, j);
    ASSERT_EQ(d, parallel::circular_distance(n, j, i));
    ASSERT_LE(d, n / 2);
    ASSERT_EQ(d == 0, i == j);
  }
}

TEST(Property, LiftIsBalancedAndEmbedsInput) {
  Rng rng(17);
  for (int c = 0; c < 500; ++c) {
    const Index n = 1 + rng() % 70;
    const auto x = random_keys(n, rng, 2);
    const auto y = analysis::lift(x);
    const Index offset = analysis::lift_offset(x);
    ASSERT_EQ(y.size(), Index{2} << ceil_log2(n));
    ASSERT_EQ(2 * static_cast<Index>(std::count(y.begin(), y.end(), Key{1})), y.size());
    ASSERT_TRUE(std::equal(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(offset)));
    ASSERT_TRUE(std::all_of(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(offset),
                            [](Key v) { return v == 0; }));
    ASSERT_TRUE(std::all_of(y.begin() + static_cast<std::ptrdiff_t>(offset + n), y.end(),
                            [](Key v) { return v == 1; }));
  }
}

TEST(Property, MisplacedCountsAreConsistent) {
  Rng rng(19);
  for (int c = 0; c < 500; ++c) {
    const Index n = Index{2} << (rng() % 7);
    std::vector<Key> x(n, 0);
    std::fill(x.begin() + static_cast<std::ptrdiff_t>(n / 2), x.end(), Key{1});
    std::shuffle(x.begin(), x.end(), rng);
    const auto counts = analysis::misplaced_counts(x);
    // Balance: misplaced zeros and ones pair up.
    ASSERT_EQ(counts.misplaced, counts.misplaced_ones);
    std::uint64_t upper = 0, lower = 0;
    for (auto v : counts.zeros_in_upper) upper += v;
    for (auto v : counts.ones_in_lower) lower += v;
    ASSERT_LE(upper, counts.misplaced);
    ASSERT_LE(lower, counts.misplaced_ones);
    ASSERT_EQ(analysis::in_omega(x, 0), true);
    if (counts.misplaced == 0) ASSERT_TRUE(analysis::in_omega(x, floor_log2(n) + 1));
  }
}
