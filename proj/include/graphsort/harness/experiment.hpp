#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphsort/run_stats.hpp"

namespace graphsort::harness {

/// Which sorter an experiment drives. `name` is one of
///   uniform, adjacent, harmonic, gray, custom          (sequential)
///   structured, thinned, dimcut                        (synchronous rounds)
///   async-atomic, async-mark                           (worker threads)
/// `scale` applies to harmonic and to the async samplers (harmonic weights),
/// `p` is the thinned proposal count or the async worker count, and `table`
/// is the custom weight file.
struct SorterConfig {
  std::string name = "harmonic";
  double scale = 4.0;
  Index p = 0;
  std::string table;
};

struct ExperimentConfig {
  SorterConfig sorter;
  std::string input_kind = "reverse";
  std::vector<Index> n_list;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  std::optional<double> fault_prob;
  double budget_multiplier = 1.0;
  std::string output_path;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;   // record wall_ns; off keeps output reproducible
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const ExperimentConfig& config);

/// Reads the JSON config format (field names as in ExperimentConfig, in
/// camelCase: sorter, inputKind, nList, trials, masterSeed, faultProb,
/// budgetMultiplier, outputPath, threads, timing).
ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// One run for (n, trial) with stream derive_seed(master_seed, n, trial).
RunStats run_trial(const ExperimentConfig& config, Index n, std::uint64_t trial);

/// trials x |n_list| runs fanned out over worker threads; the result is in
/// (n_list order, trial) order regardless of completion order.
std::vector<RunStats> run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "sorter,n,trial,seed,comparisons,swaps,rounds,sim_time,sorted,wall_ns";

void write_csv(std::ostream& out, const std::vector<RunStats>& table);
std::vector<RunStats> read_csv(std::istream& in);
std::string to_json(const RunStats& stats);
std::string to_json(const std::vector<RunStats>& table);

}  // namespace graphsort::harness
