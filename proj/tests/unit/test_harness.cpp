#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "graphsort/harness/experiment.hpp"
#include "graphsort/harness/fit.hpp"
#include "graphsort/harness/oracles.hpp"
#include "graphsort/harness/qalpha.hpp"

using namespace graphsort;
using namespace graphsort::harness;

namespace {

std::string csv_of(const std::vector<RunStats>& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

ExperimentConfig small_config(const std::string& sorter) {
  ExperimentConfig c;
  c.sorter.name = sorter;
  c.input_kind = "random";
  c.n_list = {16, 32};
  c.trials = 5;
  c.master_seed = 42;
  return c;
}

RunStats planted(Index n, double value) {
  RunStats s;
  s.sorter = "planted";
  s.n = n;
  s.comparisons = static_cast<std::uint64_t>(std::llround(value));
  s.rounds = static_cast<std::uint64_t>(std::llround(value));
  s.sorted = true;
  return s;
}

}  // namespace

TEST(Config, ParsesAllFields) {
  const auto c = parse_config_json(R"({
    "sorter": {"name": "thinned", "p": 8},
    "inputKind": "alternating",
    "nList": [64, 128],
    "trials": 3,
    "masterSeed": 7,
    "budgetMultiplier": 2.5,
    "outputPath": "out.csv",
    "threads": 2
  })");
  EXPECT_EQ(c.sorter.name, "thinned");
  EXPECT_EQ(c.sorter.p, 8u);
  EXPECT_EQ(c.input_kind, "alternating");
  EXPECT_EQ(c.n_list, (std::vector<Index>{64, 128}));
  EXPECT_EQ(c.trials, 3u);
  EXPECT_EQ(c.master_seed, 7u);
  EXPECT_FALSE(c.fault_prob.has_value());
  EXPECT_DOUBLE_EQ(c.budget_multiplier, 2.5);
  EXPECT_EQ(c.output_path, "out.csv");
}

TEST(Config, StringSorterAndFault) {
  const auto c = parse_config_json(
      R"({"sorter": "harmonic", "nList": [32], "faultProb": 0.5, "trials": 1})");
  EXPECT_EQ(c.sorter.name, "harmonic");
  ASSERT_TRUE(c.fault_prob.has_value());
  EXPECT_DOUBLE_EQ(*c.fault_prob, 0.5);
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config_json("not json"), std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "bogus", "nList": [8]})"), std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "uniform"})"), std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "uniform", "nList": []})"), std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "structured", "nList": [24]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "structured", "nList": [64], "faultProb": 0.5})"),
               std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "harmonic", "nList": [64], "faultProb": 0})"),
               std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "gray", "nList": [48]})"), std::invalid_argument);
  EXPECT_THROW(parse_config_json(R"({"sorter": "uniform", "nList": [8], "inputKind": "x"})"),
               std::invalid_argument);
}

TEST(Experiment, RerunsAreBitIdentical) {
  for (const char* sorter : {"uniform", "harmonic", "gray", "structured", "dimcut", "async-mark"}) {
    auto c = small_config(sorter);
    if (std::string(sorter) == "async-mark") c.sorter.p = 2;
    const std::string first = csv_of(run_experiment(c));
    const std::string second = csv_of(run_experiment(c));
    EXPECT_EQ(first, second) << sorter;
  }
}

TEST(Experiment, ThreadCountDoesNotChangeResults) {
  auto c = small_config("harmonic");
  c.trials = 20;
  c.threads = 1;
  const std::string one = csv_of(run_experiment(c));
  c.threads = 4;
  EXPECT_EQ(csv_of(run_experiment(c)), one);
}

TEST(Experiment, RowsInConfigOrderWithDerivedSeeds) {
  const auto c = small_config("uniform");
  const auto table = run_experiment(c);
  ASSERT_EQ(table.size(), 10u);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const RunStats& s = table[i];
    EXPECT_EQ(s.n, c.n_list[i / 5]);
    EXPECT_EQ(s.trial, i % 5);
    EXPECT_EQ(s.seed, derive_seed(42, s.n, s.trial));
    EXPECT_TRUE(s.sorted);
    EXPECT_TRUE(s.value_conserving);
    EXPECT_EQ(s.wall_ns, 0);
  }
  EXPECT_EQ(run_trial(c, 32, 3).comparisons, table[8].comparisons);
}

TEST(Experiment, CustomSorterFromTable) {
  const auto path = std::filesystem::temp_directory_path() / "graphsort_path_table.txt";
  {
    std::ofstream out(path);
    for (int i = 0; i + 1 < 8; ++i) out << i << ' ' << i + 1 << " 1\n";
  }
  ExperimentConfig c = small_config("custom");
  c.sorter.table = path.string();
  c.n_list = {8};
  const auto table = run_experiment(c);
  for (const auto& s : table) {
    EXPECT_TRUE(s.sorted);
    EXPECT_EQ(s.sorter, "custom");
  }
  std::filesystem::remove(path);
}

TEST(Experiment, FaultScalesTheBudget) {
  auto c = small_config("harmonic");
  c.fault_prob = 0.25;
  for (const auto& s : run_experiment(c)) EXPECT_TRUE(s.sorted);
}

TEST(Csv, HeaderAndRoundTrip) {
  auto c = small_config("harmonic");
  const auto table = run_experiment(c);
  const std::string text = csv_of(table);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "sorter,n,trial,seed,comparisons,swaps,rounds,sim_time,sorted,wall_ns");
  std::istringstream in(text);
  const auto back = read_csv(in);
  ASSERT_EQ(back.size(), table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(back[i].seed, table[i].seed);
    EXPECT_EQ(back[i].comparisons, table[i].comparisons);
    EXPECT_EQ(back[i].sim_time, table[i].sim_time);  // shortest round-trip formatting
  }
  EXPECT_EQ(csv_of(back), text);
}

TEST(Csv, RejectsMalformedInput) {
  std::istringstream bad_header("a,b,c\n");
  EXPECT_THROW(read_csv(bad_header), std::invalid_argument);
  std::istringstream short_row(std::string(kCsvHeader) + "\nharmonic,8,0\n");
  EXPECT_THROW(read_csv(short_row), std::invalid_argument);
  std::istringstream bad_number(std::string(kCsvHeader) + "\nharmonic,x,0,1,2,3,4,0.5,1,0\n");
  EXPECT_THROW(read_csv(bad_number), std::invalid_argument);
}

TEST(Json, RunStatsFields) {
  RunStats s = planted(8, 10);
  const auto j = nlohmann::json::parse(to_json(s));
  for (const char* key : {"sorter", "n", "trial", "seed", "comparisons", "swaps", "rounds",
                          "sim_time", "sorted", "wall_ns"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Fit, PlantedLawIsFlat) {
  std::vector<RunStats> table;
  for (Index n : {64u, 128u, 256u, 512u, 1024u}) {
    const double v = 3.0 * law_value(Law::NSquaredLogN, static_cast<double>(n));
    table.push_back(planted(n, v));
    table.push_back(planted(n, v));
  }
  const auto report = fit_scaling(table, default_laws());
  EXPECT_EQ(report.best(), Law::NSquaredLogN);
  EXPECT_NEAR(report.fit_for(Law::NSquaredLogN).flatness, 1.0, 1e-4);  // counts are rounded
  EXPECT_NEAR(report.fit_for(Law::NSquaredLogN).ratios.front(), 3.0, 1e-4);
  EXPECT_GT(report.fit_for(Law::NSquared).flatness, 1.3);
  EXPECT_GT(report.loglog_slope, 2.0);
  EXPECT_LT(report.loglog_slope, 2.3);
}

TEST(Fit, RoundsMetric) {
  std::vector<RunStats> table;
  for (Index n : {16u, 64u, 256u, 1024u}) {
    table.push_back(planted(n, 5.0 * law_value(Law::LogSquaredN, static_cast<double>(n))));
  }
  const std::vector<Law> laws{Law::LogSquaredN, Law::NLogN};
  EXPECT_EQ(fit_scaling(table, laws, Metric::Rounds).best(), Law::LogSquaredN);
}

TEST(Fit, InsufficientData) {
  std::vector<RunStats> table{planted(8, 1), planted(16, 2), planted(32, 3)};
  EXPECT_THROW(fit_scaling(table, default_laws()), std::invalid_argument);
}

TEST(Fit, LawNames) {
  for (Law law : default_laws()) EXPECT_EQ(parse_law(law_name(law)), law);
  EXPECT_THROW(parse_law("n!"), std::invalid_argument);
}

TEST(QAlpha, ExactStructuredPasses) {
  for (Index n : {8u, 16u, 32u, 64u}) {
    const auto report = verify_qalpha_exact(n);
    EXPECT_TRUE(report.pass) << n;
    EXPECT_GE(report.worst_margin, 1.0 - 1e-9);
  }
}

TEST(QAlpha, DoubledAlphaIsCaught) {
  const auto report = verify_qalpha_exact(8, 2.0);
  EXPECT_FALSE(report.pass);
  EXPECT_NEAR(report.worst_margin, 0.5, 1e-9);
  EXPECT_EQ(report.worst_distance, 1u);
  const auto j = nlohmann::json::parse(to_json(report));
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["worstPair"].size(), 2u);
}

TEST(QAlpha, MonteCarloStructuredAgreesWithExact) {
  const parallel::MatchingSamplerSpec spec{parallel::MatchingKind::StructuredPowerOfTwo, 16, 0};
  EXPECT_TRUE(verify_qalpha_montecarlo(spec, 50000, 1).pass);
  EXPECT_FALSE(verify_qalpha_montecarlo(spec, 50000, 1, 3.0).pass);
}

TEST(QAlpha, Constants) {
  using parallel::MatchingKind;
  EXPECT_DOUBLE_EQ(qalpha_constant({MatchingKind::StructuredPowerOfTwo, 64, 0}), 1.0 / 24.0);
  EXPECT_NEAR(qalpha_constant({MatchingKind::ThinnedIid, 256, 64}), 1.0 / (16.0 * std::log(256.0)),
              1e-15);
  EXPECT_THROW(qalpha_constant({MatchingKind::HypercubeDimCut, 64, 0}), std::invalid_argument);
}

TEST(Oracles, JsonShape) {
  const auto report = check_zero_one_principle(4, 5, 8, 1);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.trials, 24u * 5u);
  const std::string text = to_json(report);
  EXPECT_LT(text.find("\"check\""), text.find("\"n\""));
  EXPECT_LT(text.find("\"failures\""), text.find("\"firstCounterexample\""));
  const auto j = nlohmann::json::parse(text);
  EXPECT_TRUE(j["firstCounterexample"].is_null());
}

TEST(Oracles, RecurrenceReportsCounterexample) {
  const auto ok = check_recurrence(12);
  EXPECT_TRUE(ok.passed());
  const auto bad = check_recurrence(14);
  EXPECT_EQ(bad.failures, 2u);
  ASSERT_TRUE(bad.first_counterexample.has_value());
  EXPECT_EQ(bad.first_counterexample->rfind("N=13", 0), 0u);
}

TEST(Oracles, TraceChecksPass) {
  EXPECT_TRUE(check_inversion_trace(graph::PairWeightSpec::uniform(20), 3000, 1).passed());
  EXPECT_TRUE(check_level_trace(graph::PairWeightSpec::harmonic(32), 3000, 2).passed());
  EXPECT_TRUE(check_lift(7, 200, 3).passed());
  EXPECT_THROW(check_level_trace(graph::PairWeightSpec::uniform(12), 10, 1), std::invalid_argument);
}
