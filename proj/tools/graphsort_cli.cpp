// graphsort: run randomized graph sorters, experiments and correctness checks.
//
// Exit status: 0 success, 1 a check failed (or a run did not sort), 2 bad
// usage or unreadable input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphsort/engine/inputs.hpp"
#include "graphsort/engine/sequential.hpp"
#include "graphsort/graph/custom_table.hpp"
#include "graphsort/harness/experiment.hpp"
#include "graphsort/harness/fit.hpp"
#include "graphsort/harness/oracles.hpp"
#include "graphsort/harness/qalpha.hpp"

namespace gs = graphsort;
namespace harness = graphsort::harness;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or stdout when empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  fn(out);
}

bool all_sorted(const std::vector<gs::RunStats>& table) {
  for (const auto& s : table) {
    if (!s.sorted || !s.value_conserving) return false;
  }
  return true;
}

void summarize(const std::vector<gs::RunStats>& table) {
  std::size_t unsorted = 0;
  for (const auto& s : table) unsorted += !s.sorted || !s.value_conserving;
  std::cerr << table.size() << " runs, " << unsorted << " unsorted\n";
}

// ---- sort ----

struct SortArgs {
  std::string sorter = "harmonic";
  gs::Index n = 64;
  std::string input = "reverse";
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;
  double scale = 4.0;
  std::string table;
  std::optional<double> fault;
  double budget = 1.0;
  std::string out;
  bool timing = false;
  bool print_keys = false;
  std::size_t trace = 0;
};

int run_sort(const SortArgs& a) {
  harness::ExperimentConfig c;
  c.sorter.name = a.sorter;
  c.sorter.scale = a.scale;
  c.sorter.table = a.table;
  c.input_kind = a.input;
  c.n_list = {a.n};
  c.trials = a.trials;
  c.master_seed = a.seed;
  c.fault_prob = a.fault;
  c.budget_multiplier = a.budget;
  c.timing = a.timing;
  if (c.sorter.name != "uniform" && c.sorter.name != "adjacent" && c.sorter.name != "harmonic" &&
      c.sorter.name != "gray" && c.sorter.name != "custom") {
    throw UsageError("sort takes a sequential sorter; use `parallel` for " + c.sorter.name);
  }
  harness::validate(c);

  if (a.print_keys || a.trace > 0) {
    // Single traced run, replaying the harness seed derivation.
    const std::uint64_t seed = gs::derive_seed(a.seed, a.n, 0);
    gs::Rng rng(seed);
    auto input = gs::engine::make_input(gs::engine::parse_input_spec(a.input), a.n, rng);
    gs::graph::PairWeightSpec spec =
        a.sorter == "uniform"    ? gs::graph::PairWeightSpec::uniform(a.n)
        : a.sorter == "adjacent" ? gs::graph::PairWeightSpec::adjacent(a.n)
        : a.sorter == "gray"     ? gs::graph::PairWeightSpec::gray_hypercube(a.n)
        : a.sorter == "custom"   ? gs::graph::load_custom_table(a.table, a.n)
                                 : gs::graph::PairWeightSpec::harmonic(a.n, a.scale);
    const gs::graph::EdgeSampler sampler(spec);
    const auto fault = a.fault ? gs::engine::FaultModel::constant(*a.fault)
                               : gs::engine::FaultModel::none();
    std::uint64_t budget = static_cast<std::uint64_t>(
        static_cast<double>(gs::engine::default_max_steps(spec)) * a.budget / a.fault.value_or(1.0));
    gs::engine::TraceOptions trace;
    if (a.trace > 0) trace = {gs::engine::TraceMode::Ring, a.trace};
    auto run = gs::engine::run_sequential(std::move(input), sampler, fault, rng,
                                          std::max<std::uint64_t>(budget, 1), trace);
    run.stats.seed = seed;
    with_output(a.out, [&](std::ostream& out) {
      harness::write_csv(out, {run.stats});
      for (const auto& e : run.trace) {
        out << "# step " << e.step << " (" << e.pair.first << ',' << e.pair.second << ") "
            << (e.swapped ? "swap" : "keep") << " t=" << e.sim_time << '\n';
      }
      if (a.print_keys) {
        out << "#";
        for (gs::Key k : run.keys) out << ' ' << k;
        out << '\n';
      }
    });
    return run.stats.sorted ? kOk : kCheckFailed;
  }

  const auto table = harness::run_experiment(c);
  with_output(a.out, [&](std::ostream& out) { harness::write_csv(out, table); });
  return all_sorted(table) ? kOk : kCheckFailed;
}

// ---- experiment ----

struct ExperimentArgs {
  std::string config;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  bool timing = false;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  harness::ExperimentConfig c = harness::load_config(a.config);
  if (!a.out.empty()) c.output_path = a.out;
  if (a.threads) c.threads = a.threads;
  if (a.timing) c.timing = true;
  const auto table = harness::run_experiment(c);
  with_output(c.output_path, [&](std::ostream& out) {
    if (a.format == "json") {
      out << harness::to_json(table) << '\n';
    } else {
      harness::write_csv(out, table);
    }
  });
  summarize(table);
  return kOk;
}

// ---- fit ----

struct FitArgs {
  std::string csv;
  std::string metric = "comparisons";
  std::vector<std::string> laws;
  std::optional<std::string> expect;
  std::optional<double> max_flatness;
};

int run_fit(const FitArgs& a) {
  std::ifstream in(a.csv);
  if (!in) throw UsageError("cannot open " + a.csv);
  const auto table = harness::read_csv(in);

  std::vector<harness::Law> laws;
  for (const auto& name : a.laws) laws.push_back(harness::parse_law(name));
  if (laws.empty()) laws = harness::default_laws();
  const harness::Metric metric = a.metric == "rounds"     ? harness::Metric::Rounds
                                 : a.metric == "sim_time" ? harness::Metric::SimTime
                                                          : harness::Metric::Comparisons;
  const auto report = harness::fit_scaling(table, laws, metric);
  std::cout << harness::format_report(report);

  bool ok = true;
  if (a.expect) {
    const harness::Law law = harness::parse_law(*a.expect);
    const double flatness = report.fit_for(law).flatness;
    ok = !a.max_flatness || flatness <= *a.max_flatness;
    std::cout << "expected " << *a.expect << ": flatness " << flatness << '\n';
  } else if (a.max_flatness) {
    ok = report.fits.front().flatness <= *a.max_flatness;
  }
  return ok ? kOk : kCheckFailed;
}

// ---- verify-qalpha ----

struct QAlphaArgs {
  std::string sampler = "structured";
  std::string mode = "exact";
  gs::Index n = 64;
  gs::Index p = 0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  double alpha_scale = 1.0;
};

int run_qalpha(const QAlphaArgs& a) {
  harness::QAlphaReport report;
  if (a.mode == "exact") {
    if (a.sampler != "structured") throw UsageError("exact mode supports the structured sampler");
    report = harness::verify_qalpha_exact(a.n, a.alpha_scale);
  } else {
    gs::parallel::MatchingSamplerSpec spec{gs::parallel::MatchingKind::StructuredPowerOfTwo, a.n,
                                           0};
    if (a.sampler == "thinned") {
      spec.kind = gs::parallel::MatchingKind::ThinnedIid;
      spec.p = a.p ? a.p : a.n / 4;
    } else if (a.sampler != "structured") {
      throw UsageError("unknown sampler " + a.sampler);
    }
    report = harness::verify_qalpha_montecarlo(spec, a.samples, a.seed, a.alpha_scale);
  }
  std::cout << harness::to_json(report) << '\n';
  return report.pass ? kOk : kCheckFailed;
}

// ---- oracle ----

struct OracleArgs {
  std::string check;
  std::string sorter = "harmonic";
  gs::Index n = 6;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::string out;
};

int run_oracle(const OracleArgs& a) {
  auto spec = [&] {
    if (a.sorter == "uniform") return gs::graph::PairWeightSpec::uniform(a.n);
    if (a.sorter == "adjacent") return gs::graph::PairWeightSpec::adjacent(a.n);
    if (a.sorter == "gray") return gs::graph::PairWeightSpec::gray_hypercube(a.n);
    if (a.sorter == "harmonic") return gs::graph::PairWeightSpec::harmonic(a.n);
    throw UsageError("oracle sorter must be uniform, adjacent, harmonic or gray");
  };
  harness::OracleReport report;
  if (a.check == "zero-one") {
    report = harness::check_zero_one_principle(a.n, a.trials, a.n * a.n, a.seed);
  } else if (a.check == "inversions") {
    report = harness::check_inversion_trace(spec(), a.trials, a.seed);
  } else if (a.check == "levels") {
    report = harness::check_level_trace(spec(), a.trials, a.seed);
  } else if (a.check == "lift") {
    report = harness::check_lift(a.n, a.trials, a.seed);
  } else if (a.check == "recurrence") {
    report = harness::check_recurrence(static_cast<unsigned>(a.n));
  } else {
    throw UsageError("unknown check " + a.check);
  }
  with_output(a.out, [&](std::ostream& out) { out << harness::to_json(report) << '\n'; });
  return report.passed() ? kOk : kCheckFailed;
}

// ---- parallel ----

struct ParallelArgs {
  std::string mode = "structured";
  gs::Index n = 256;
  gs::Index p = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  std::string input = "reverse";
  std::optional<double> fault;
  double budget = 1.0;
  std::string out;
  bool timing = false;
};

int run_parallel_cmd(const ParallelArgs& a) {
  harness::ExperimentConfig c;
  c.sorter.name = a.mode;
  c.sorter.p = a.p;
  c.input_kind = a.input;
  c.n_list = {a.n};
  c.trials = a.trials;
  c.master_seed = a.seed;
  c.fault_prob = a.fault;
  c.budget_multiplier = a.budget;
  c.timing = a.timing;
  if (a.mode == "thinned" && a.p == 0) c.sorter.p = a.n / 4;
  const auto table = harness::run_experiment(c);
  with_output(a.out, [&](std::ostream& out) { harness::write_csv(out, table); });
  summarize(table);
  return all_sorted(table) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized sorting on weighted comparison graphs"};
  app.require_subcommand(1);

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "Sequential random comparator runs");
  sort->add_option("--sorter", sort_args.sorter, "uniform|adjacent|harmonic|gray|custom")
      ->check(CLI::IsMember({"uniform", "adjacent", "harmonic", "gray", "custom"}));
  sort->add_option("--n", sort_args.n, "Array length")->check(CLI::Range(2, 1 << 26));
  sort->add_option("--input", sort_args.input,
                   "reverse|alternating|random|zero-one-balanced-worst|file:PATH");
  sort->add_option("--seed", sort_args.seed, "Master seed");
  sort->add_option("--trials", sort_args.trials)->check(CLI::PositiveNumber);
  sort->add_option("--scale", sort_args.scale, "Harmonic weight scale");
  sort->add_option("--table", sort_args.table, "Custom weight table (i j weight)");
  sort->add_option("--fault", sort_args.fault, "Comparator success probability");
  sort->add_option("--budget-multiplier", sort_args.budget);
  sort->add_option("--out", sort_args.out, "CSV output (default stdout)");
  sort->add_flag("--timing", sort_args.timing, "Record wall_ns");
  sort->add_flag("--print-keys", sort_args.print_keys, "Print the final array (one trial)");
  sort->add_option("--trace", sort_args.trace, "Print the last N comparisons (one trial)");

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "Run a JSON-configured experiment");
  experiment->add_option("--config", exp_args.config)->required()->check(CLI::ExistingFile);
  experiment->add_option("--out", exp_args.out, "Overrides outputPath");
  experiment->add_option("--format", exp_args.format)->check(CLI::IsMember({"csv", "json"}));
  experiment->add_option("--threads", exp_args.threads);
  experiment->add_flag("--timing", exp_args.timing);

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Fit mean cost against scaling laws");
  fit->add_option("--csv", fit_args.csv)->required();
  fit->add_option("--metric", fit_args.metric)
      ->check(CLI::IsMember({"comparisons", "rounds", "sim_time"}));
  fit->add_option("--law", fit_args.laws, "Candidate law, e.g. \"n^2 log n\" (repeatable)");
  fit->add_option("--expect", fit_args.expect, "Law whose flatness is checked");
  fit->add_option("--max-flatness", fit_args.max_flatness);

  QAlphaArgs q_args;
  auto* qalpha = app.add_subcommand("verify-qalpha", "Check pair marginals against alpha/dist");
  qalpha->add_option("--sampler", q_args.sampler)
      ->check(CLI::IsMember({"structured", "thinned"}));
  qalpha->add_option("--mode", q_args.mode)->check(CLI::IsMember({"exact", "montecarlo"}));
  qalpha->add_option("--n", q_args.n);
  qalpha->add_option("--p", q_args.p);
  qalpha->add_option("--samples", q_args.samples);
  qalpha->add_option("--seed", q_args.seed);
  qalpha->add_option("--alpha-scale", q_args.alpha_scale);

  OracleArgs o_args;
  auto* oracle = app.add_subcommand("oracle", "Correctness oracles with JSON reports");
  oracle->add_option("--check", o_args.check)
      ->required()
      ->check(CLI::IsMember({"zero-one", "inversions", "levels", "lift", "recurrence"}));
  oracle->add_option("--sorter", o_args.sorter);
  oracle->add_option("--n", o_args.n, "Array length (levels N for recurrence)");
  oracle->add_option("--trials", o_args.trials, "Traces per permutation, or steps");
  oracle->add_option("--seed", o_args.seed);
  oracle->add_option("--out", o_args.out);

  ParallelArgs p_args;
  auto* parallel = app.add_subcommand("parallel", "Matching rounds and concurrent executors");
  parallel->add_option("--mode", p_args.mode)
      ->check(CLI::IsMember({"structured", "thinned", "dimcut", "async-atomic", "async-mark"}));
  parallel->add_option("--n", p_args.n)->check(CLI::Range(2, 1 << 26));
  parallel->add_option("--p", p_args.p, "Proposals per round or worker threads");
  parallel->add_option("--trials", p_args.trials)->check(CLI::PositiveNumber);
  parallel->add_option("--seed", p_args.seed);
  parallel->add_option("--input", p_args.input);
  parallel->add_option("--fault", p_args.fault, "Comparator success probability (async only)");
  parallel->add_option("--budget-multiplier", p_args.budget);
  parallel->add_option("--out", p_args.out);
  parallel->add_flag("--timing", p_args.timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sort) return run_sort(sort_args);
    if (*experiment) return run_experiment_cmd(exp_args);
    if (*fit) return run_fit(fit_args);
    if (*qalpha) return run_qalpha(q_args);
    if (*oracle) return run_oracle(o_args);
    if (*parallel) return run_parallel_cmd(p_args);
  } catch (const std::exception& e) {
    std::cerr << "graphsort: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
