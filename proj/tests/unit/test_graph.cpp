#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "graphsort/graph/alias_table.hpp"
#include "graphsort/graph/custom_table.hpp"
#include "graphsort/graph/gray.hpp"
#include "graphsort/graph/sampler.hpp"
#include "graphsort/graph/weights.hpp"

using namespace graphsort;
using namespace graphsort::graph;

TEST(Weights, HarmonicTotalWeightSmallCases) {
  EXPECT_NEAR(total_weight(PairWeightSpec::harmonic(4)), 52.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(total_weight(PairWeightSpec::harmonic(2)), 4.0);
}

TEST(Weights, HarmonicN4WithinLogBounds) {
  const double w = total_weight(PairWeightSpec::harmonic(4));
  EXPECT_LE(4 * (4 * std::log(4.0) - 4), w);
  EXPECT_LE(w, 4 * (4 * std::log(4.0) + 4));
}

TEST(Weights, HarmonicMatchesBruteForceSum) {
  for (Index n : {3u, 17u, 100u}) {
    double brute = 0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) brute += 4.0 / static_cast<double>(j - i);
    }
    EXPECT_NEAR(total_weight(PairWeightSpec::harmonic(n)), brute, 1e-9 * brute) << n;
  }
}

TEST(Weights, UniformAndAdjacentTotals) {
  EXPECT_DOUBLE_EQ(total_weight(PairWeightSpec::uniform(4)), 6.0);
  EXPECT_DOUBLE_EQ(total_weight(PairWeightSpec::uniform(100)), 4950.0);
  EXPECT_DOUBLE_EQ(total_weight(PairWeightSpec::adjacent(5)), 4.0);
}

TEST(Weights, GrayTotalIsHypercubeEdgeCount) {
  EXPECT_DOUBLE_EQ(total_weight(PairWeightSpec::gray_hypercube(8)), 12.0);
  EXPECT_DOUBLE_EQ(total_weight(PairWeightSpec::gray_hypercube(1024)), 5120.0);
}

TEST(Weights, PairProbabilities) {
  EXPECT_NEAR(pair_probability(PairWeightSpec::harmonic(4), 0, 3), 1.0 / 13.0, 1e-12);
  EXPECT_NEAR(pair_probability(PairWeightSpec::harmonic(4), 3, 0), 1.0 / 13.0, 1e-12);
  EXPECT_NEAR(pair_probability(PairWeightSpec::uniform(4), 1, 2), 1.0 / 6.0, 1e-12);
  // Gray codes of 0 and 3 are 000 and 010 -> adjacent; of 0 and 2 are 000 and 011 -> not.
  EXPECT_GT(pair_probability(PairWeightSpec::gray_hypercube(8), 0, 3), 0.0);
  EXPECT_EQ(pair_probability(PairWeightSpec::gray_hypercube(8), 0, 2), 0.0);
}

TEST(Weights, RejectsBadSpecs) {
  EXPECT_THROW(validate(PairWeightSpec::uniform(1)), std::invalid_argument);
  EXPECT_THROW(validate(PairWeightSpec::gray_hypercube(12)), std::invalid_argument);
  EXPECT_THROW(validate(PairWeightSpec::harmonic(8, -1.0)), std::invalid_argument);
  EXPECT_THROW(pair_weight(PairWeightSpec::uniform(4), 2, 2), std::invalid_argument);
  EXPECT_THROW(pair_weight(PairWeightSpec::uniform(4), 0, 4), std::out_of_range);
}

TEST(Weights, Connectivity) {
  EXPECT_TRUE(is_connected(PairWeightSpec::adjacent(7)));
  EXPECT_TRUE(is_connected(PairWeightSpec::gray_hypercube(16)));
  EXPECT_FALSE(is_connected(PairWeightSpec::custom(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}})));
}

TEST(Gray, CodesAndInverse) {
  EXPECT_EQ(gray_code(0), 0b00u);
  EXPECT_EQ(gray_code(1), 0b01u);
  EXPECT_EQ(gray_code(2), 0b11u);
  EXPECT_EQ(gray_code(3), 0b10u);
  for (std::uint64_t i = 0; i < 4096; ++i) EXPECT_EQ(gray_inverse(gray_code(i)), i);
}

TEST(Gray, Edges) {
  EXPECT_TRUE(is_gray_edge(0, 1, 8));
  EXPECT_TRUE(is_gray_edge(0, 7, 8));  // 000 and 100
  EXPECT_FALSE(is_gray_edge(0, 2, 8));
  EXPECT_THROW(is_gray_edge(0, 0, 8), std::invalid_argument);
  EXPECT_THROW(is_gray_edge(0, 1, 6), std::invalid_argument);
  EXPECT_THROW(is_gray_edge(0, 8, 8), std::out_of_range);
}

TEST(Gray, EveryVertexHasDegreeLgN) {
  const Index n = 32;
  for (Index i = 0; i < n; ++i) {
    int degree = 0;
    for (Index j = 0; j < n; ++j) degree += j != i && is_gray_edge(i, j, n);
    EXPECT_EQ(degree, 5);
  }
}

TEST(AliasTable, ZeroWeightsNeverDrawn) {
  const std::vector<double> w{0.0, 3.0, 0.0, 1.0, 0.0};
  AliasTable table(w);
  Rng rng(7);
  std::vector<int> counts(w.size());
  for (int s = 0; s < 40000; ++s) ++counts[table.sample(rng)];
  EXPECT_EQ(counts[0] + counts[2] + counts[4], 0);
  EXPECT_NEAR(counts[1] / 40000.0, 0.75, 0.01);
}

TEST(AliasTable, RejectsDegenerateInput) {
  EXPECT_THROW(AliasTable(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(AliasTable(std::vector<double>{0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(AliasTable(std::vector<double>{1.0, -1.0}), std::invalid_argument);
}

TEST(Sampler, UniformN3IsBalanced) {
  EdgeSampler sampler(PairWeightSpec::uniform(3));
  Rng rng(11);
  std::map<Pair, int> counts;
  for (int s = 0; s < 60000; ++s) ++counts[sampler.sample(rng)];
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [pair, c] : counts) EXPECT_NEAR(c, 20000, 600);
}

TEST(Sampler, AdjacentN2AlwaysTheSinglePair) {
  EdgeSampler sampler(PairWeightSpec::adjacent(2));
  Rng rng(3);
  for (int s = 0; s < 100; ++s) EXPECT_EQ(sampler.sample(rng), (Pair{0, 1}));
}

TEST(Sampler, HarmonicN4FrequencyOfLongestPair) {
  EdgeSampler sampler(PairWeightSpec::harmonic(4));
  Rng rng(5);
  const int draws = 100000;
  int hits = 0;
  for (int s = 0; s < draws; ++s) hits += sampler.sample(rng) == Pair{0, 3};
  const double p = 1.0 / 13.0;
  EXPECT_NEAR(hits / double(draws), p, 3 * std::sqrt(p * (1 - p) / draws));
}

// Pearson chi-square against pair_probability for every family; the
// threshold is far in the tail for these degrees of freedom.
TEST(Sampler, ChiSquareAgainstPairProbabilities) {
  const std::vector<PairWeightSpec> specs{
      PairWeightSpec::uniform(12), PairWeightSpec::adjacent(12), PairWeightSpec::harmonic(12),
      PairWeightSpec::gray_hypercube(16),
      PairWeightSpec::custom(5, {{{0, 4}, 2.0}, {{1, 2}, 0.5}, {{2, 3}, 1.0}})};
  for (const auto& spec : specs) {
    EdgeSampler sampler(spec);
    Rng rng(99);
    const int draws = 200000;
    std::map<Pair, int> counts;
    for (int s = 0; s < draws; ++s) {
      const Pair e = sampler.sample(rng);
      ASSERT_LT(e.first, e.second);
      ++counts[e];
    }
    double chi2 = 0;
    int cells = 0;
    for (Index i = 0; i < spec.n; ++i) {
      for (Index j = i + 1; j < spec.n; ++j) {
        const double expected = draws * pair_probability(spec, i, j);
        if (expected == 0) {
          EXPECT_EQ((counts[Pair{i, j}]), 0);
          continue;
        }
        const double diff = counts[Pair{i, j}] - expected;
        chi2 += diff * diff / expected;
        ++cells;
      }
    }
    // Mean cells-1, sd sqrt(2(cells-1)); allow 6 sd.
    EXPECT_LT(chi2, (cells - 1) + 6 * std::sqrt(2.0 * (cells - 1))) << family_name(spec);
  }
}

TEST(CustomTable, ParsesCommentsAndInfersN) {
  std::istringstream in("# a triangle\n0 1 1.5\n1 2 2   # trailing comment\n\n2 0 0.5\n");
  const PairWeightSpec spec = parse_custom_table(in);
  EXPECT_EQ(spec.n, 3u);
  EXPECT_EQ(family_name(spec), "custom");
  EXPECT_DOUBLE_EQ(pair_weight(spec, 0, 2), 0.5);
  EXPECT_DOUBLE_EQ(total_weight(spec), 4.0);
}

TEST(CustomTable, Errors) {
  auto parse = [](const std::string& text, std::optional<Index> n = std::nullopt) {
    std::istringstream in(text);
    return parse_custom_table(in, n);
  };
  EXPECT_THROW(parse("0 1 1\n1 0 2\n"), std::invalid_argument);  // duplicate pair
  EXPECT_THROW(parse("1 1 1\n"), std::invalid_argument);
  EXPECT_THROW(parse("0 1 1 extra\n"), std::invalid_argument);
  EXPECT_THROW(parse("0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse("0 5 1\n", Index{4}), std::invalid_argument);
  EXPECT_THROW(load_custom_table("/nonexistent/table.txt"), std::invalid_argument);
}
