#include "graphsort/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "json.hpp"

#include "graphsort/engine/inputs.hpp"
#include "graphsort/engine/sequential.hpp"
#include "graphsort/graph/custom_table.hpp"
#include "graphsort/parallel/async.hpp"
#include "graphsort/parallel/matching.hpp"

namespace graphsort::harness {
namespace {

using json = nlohmann::ordered_json;

enum class Engine { Sequential, Rounds, Async };

Engine engine_of(const std::string& name) {
  if (name == "uniform" || name == "adjacent" || name == "harmonic" || name == "gray" ||
      name == "custom") {
    return Engine::Sequential;
  }
  if (name == "structured" || name == "thinned" || name == "dimcut") return Engine::Rounds;
  if (name == "async-atomic" || name == "async-mark") return Engine::Async;
  throw std::invalid_argument("unknown sorter: " + name);
}

graph::PairWeightSpec weight_spec(const SorterConfig& s, Index n) {
  if (s.name == "uniform") return graph::PairWeightSpec::uniform(n);
  if (s.name == "adjacent") return graph::PairWeightSpec::adjacent(n);
  if (s.name == "harmonic" || s.name == "async-atomic" || s.name == "async-mark") {
    return graph::PairWeightSpec::harmonic(n, s.scale);
  }
  if (s.name == "gray") return graph::PairWeightSpec::gray_hypercube(n);
  if (s.name == "custom") return graph::load_custom_table(s.table, n);
  throw std::invalid_argument("sorter has no pair weights: " + s.name);
}

parallel::MatchingSamplerSpec matching_spec(const SorterConfig& s, Index n) {
  parallel::MatchingSamplerSpec spec;
  spec.n = n;
  if (s.name == "structured") {
    spec.kind = parallel::MatchingKind::StructuredPowerOfTwo;
  } else if (s.name == "thinned") {
    spec.kind = parallel::MatchingKind::ThinnedIid;
    spec.p = s.p;
  } else {
    spec.kind = parallel::MatchingKind::HypercubeDimCut;
  }
  return spec;
}

unsigned async_workers(const SorterConfig& s, Index n) {
  if (s.p > 0) return static_cast<unsigned>(s.p);
  return static_cast<unsigned>(std::max<Index>(1, n / 8));
}

engine::FaultModel fault_model(const ExperimentConfig& c) {
  return c.fault_prob ? engine::FaultModel::constant(*c.fault_prob) : engine::FaultModel::none();
}

std::uint64_t scaled_budget(std::uint64_t base, const ExperimentConfig& c) {
  double budget = static_cast<double>(base) * c.budget_multiplier;
  if (c.fault_prob) budget /= *c.fault_prob;
  return static_cast<std::uint64_t>(std::max(1.0, std::ceil(budget)));
}

// Everything a trial needs that depends only on n.
struct Prepared {
  Engine engine;
  std::variant<std::monostate, graph::EdgeSampler, parallel::MatchingSampler> sampler;
  std::uint64_t budget = 0;
};

Prepared prepare(const ExperimentConfig& c, Index n) {
  Prepared p{engine_of(c.sorter.name), std::monostate{}, 0};
  switch (p.engine) {
    case Engine::Sequential:
    case Engine::Async: {
      graph::EdgeSampler sampler(weight_spec(c.sorter, n));
      p.budget = scaled_budget(engine::default_max_steps(sampler.spec()), c);
      p.sampler = std::move(sampler);
      break;
    }
    case Engine::Rounds: {
      parallel::MatchingSampler sampler(matching_spec(c.sorter, n));
      p.budget = scaled_budget(parallel::default_max_rounds(sampler.spec()), c);
      p.sampler = std::move(sampler);
      break;
    }
  }
  return p;
}

RunStats execute(const ExperimentConfig& c, const Prepared& prep, Index n, std::uint64_t trial) {
  const std::uint64_t seed = derive_seed(c.master_seed, n, trial);
  Rng rng(seed);
  std::vector<Key> input = engine::make_input(engine::parse_input_spec(c.input_kind), n, rng);
  if (input.size() != n) {
    throw std::invalid_argument("input has " + std::to_string(input.size()) +
                                " keys, expected n = " + std::to_string(n));
  }
  std::vector<Key> expected = input;
  std::sort(expected.begin(), expected.end());
  const auto start = std::chrono::steady_clock::now();

  RunStats stats;
  std::vector<Key> keys;
  switch (prep.engine) {
    case Engine::Sequential: {
      auto run = engine::run_sequential(std::move(input), std::get<graph::EdgeSampler>(prep.sampler),
                                        fault_model(c), rng, prep.budget);
      stats = std::move(run.stats);
      keys = std::move(run.keys);
      break;
    }
    case Engine::Rounds: {
      auto run = parallel::run_parallel(std::move(input),
                                        std::get<parallel::MatchingSampler>(prep.sampler), rng,
                                        prep.budget);
      stats = std::move(run.stats);
      keys = std::move(run.keys);
      break;
    }
    case Engine::Async: {
      parallel::AsyncOptions options;
      options.workers = async_workers(c.sorter, n);
      options.protocol = c.sorter.name == "async-mark" ? parallel::Protocol::MarkRound
                                                      : parallel::Protocol::Atomic;
      options.budget = prep.budget;
      options.seed = seed;
      auto run = parallel::run_async(std::move(input), std::get<graph::EdgeSampler>(prep.sampler),
                                     fault_model(c), options);
      stats = std::move(run.stats);
      keys = std::move(run.keys);
      break;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  stats.trial = trial;
  stats.seed = seed;
  stats.wall_ns =
      c.timing ? std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count() : 0;
  // The engine's own bookkeeping is not trusted for the sorted column.
  stats.sorted = graphsort::is_sorted(keys);
  stats.terminal_hash = hash_keys(keys);
  std::sort(keys.begin(), keys.end());
  stats.value_conserving = keys == expected;
  return stats;
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

template <class T>
T parse_number(const std::string& field, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " field: '" + field + "'");
  }
  return value;
}

json stats_json(const RunStats& s) {
  return json{{"sorter", s.sorter},   {"n", s.n},
              {"trial", s.trial},     {"seed", s.seed},
              {"comparisons", s.comparisons},
              {"swaps", s.swaps},     {"rounds", s.rounds},
              {"sim_time", s.sim_time},
              {"sorted", s.sorted},   {"wall_ns", s.wall_ns}};
}

}  // namespace

void validate(const ExperimentConfig& c) {
  const Engine engine = engine_of(c.sorter.name);
  engine::parse_input_spec(c.input_kind);
  if (c.n_list.empty()) throw std::invalid_argument("nList is empty");
  if (c.trials == 0) throw std::invalid_argument("trials must be positive");
  if (!(c.budget_multiplier > 0.0)) throw std::invalid_argument("budgetMultiplier must be > 0");
  if (c.fault_prob) {
    if (!(*c.fault_prob > 0.0 && *c.fault_prob <= 1.0)) {
      throw std::invalid_argument("faultProb must lie in (0, 1]");
    }
    if (engine == Engine::Rounds) {
      throw std::invalid_argument("faultProb is not supported for matching sorters");
    }
  }
  for (Index n : c.n_list) {
    if (n < 2) throw std::invalid_argument("every n must be at least 2");
    switch (engine) {
      case Engine::Sequential:
        graph::validate(weight_spec(c.sorter, n));
        break;
      case Engine::Rounds:
        parallel::validate(matching_spec(c.sorter, n));
        break;
      case Engine::Async: {
        graph::validate(weight_spec(c.sorter, n));
        if (c.sorter.name == "async-mark" && async_workers(c.sorter, n) > n / 4) {
          throw std::invalid_argument("async-mark needs at most n/4 workers");
        }
        break;
      }
    }
  }
}

ExperimentConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  ExperimentConfig c;
  try {
    const json& sorter = j.at("sorter");
    if (sorter.is_string()) {
      c.sorter.name = sorter.get<std::string>();
    } else {
      c.sorter.name = sorter.at("name").get<std::string>();
      c.sorter.scale = sorter.value("scale", c.sorter.scale);
      c.sorter.p = sorter.value("p", c.sorter.p);
      c.sorter.table = sorter.value("table", c.sorter.table);
    }
    c.input_kind = j.value("inputKind", c.input_kind);
    c.n_list = j.at("nList").get<std::vector<Index>>();
    c.trials = j.value("trials", c.trials);
    c.master_seed = j.value("masterSeed", c.master_seed);
    if (j.contains("faultProb") && !j["faultProb"].is_null()) {
      c.fault_prob = j["faultProb"].get<double>();
    }
    c.budget_multiplier = j.value("budgetMultiplier", c.budget_multiplier);
    c.output_path = j.value("outputPath", c.output_path);
    c.threads = j.value("threads", c.threads);
    c.timing = j.value("timing", c.timing);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

RunStats run_trial(const ExperimentConfig& config, Index n, std::uint64_t trial) {
  return execute(config, prepare(config, n), n, trial);
}

std::vector<RunStats> run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::vector<Prepared> prepared;
  prepared.reserve(config.n_list.size());
  for (Index n : config.n_list) prepared.push_back(prepare(config, n));

  const std::size_t total = config.n_list.size() * config.trials;
  std::vector<RunStats> table(total);

  // Async runs bring their own threads.
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  if (engine_of(config.sorter.name) == Engine::Async) threads = 1;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(total, 256)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t slot; (slot = next.fetch_add(1)) < total;) {
      const std::size_t ni = slot / config.trials;
      const std::uint64_t trial = slot % config.trials;
      table[slot] = execute(config, prepared[ni], config.n_list[ni], trial);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return table;
}

void write_csv(std::ostream& out, const std::vector<RunStats>& table) {
  out << kCsvHeader << '\n';
  for (const RunStats& s : table) {
    out << s.sorter << ',' << s.n << ',' << s.trial << ',' << s.seed << ',' << s.comparisons << ','
        << s.swaps << ',' << s.rounds << ',' << format_double(s.sim_time) << ','
        << (s.sorted ? 1 : 0) << ',' << s.wall_ns << '\n';
  }
}

std::vector<RunStats> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::invalid_argument("unexpected CSV header: " + line);

  std::vector<RunStats> table;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) f.push_back(cell);
    if (f.size() != 10) throw std::invalid_argument("expected 10 CSV fields: " + line);
    RunStats s;
    s.sorter = f[0];
    s.n = parse_number<Index>(f[1], "n");
    s.trial = parse_number<std::uint64_t>(f[2], "trial");
    s.seed = parse_number<std::uint64_t>(f[3], "seed");
    s.comparisons = parse_number<std::uint64_t>(f[4], "comparisons");
    s.swaps = parse_number<std::uint64_t>(f[5], "swaps");
    s.rounds = parse_number<std::uint64_t>(f[6], "rounds");
    s.sim_time = parse_number<double>(f[7], "sim_time");
    if (f[8] == "1" || f[8] == "true") {
      s.sorted = true;
    } else if (f[8] == "0" || f[8] == "false") {
      s.sorted = false;
    } else {
      throw std::invalid_argument("bad sorted field: '" + f[8] + "'");
    }
    s.wall_ns = parse_number<std::int64_t>(f[9], "wall_ns");
    s.status = s.sorted ? RunStatus::Sorted : RunStatus::BudgetExhausted;
    table.push_back(std::move(s));
  }
  return table;
}

std::string to_json(const RunStats& stats) { return stats_json(stats).dump(); }

std::string to_json(const std::vector<RunStats>& table) {
  json rows = json::array();
  for (const RunStats& s : table) rows.push_back(stats_json(s));
  return rows.dump(2);
}

}  // namespace graphsort::harness
