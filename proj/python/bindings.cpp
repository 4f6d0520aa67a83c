#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "graphsort/analysis/coupon.hpp"
#include "graphsort/analysis/intervals.hpp"
#include "graphsort/analysis/inversions.hpp"
#include "graphsort/analysis/recurrence.hpp"
#include "graphsort/analysis/zero_one.hpp"
#include "graphsort/engine/sequential.hpp"
#include "graphsort/graph/gray.hpp"
#include "graphsort/graph/sampler.hpp"
#include "graphsort/harness/experiment.hpp"
#include "graphsort/harness/fit.hpp"
#include "graphsort/harness/qalpha.hpp"
#include "graphsort/parallel/matching.hpp"

namespace py = pybind11;
using namespace graphsort;

namespace {

graph::PairWeightSpec weights(const std::string& family, Index n, double scale) {
  if (family == "uniform") return graph::PairWeightSpec::uniform(n);
  if (family == "adjacent") return graph::PairWeightSpec::adjacent(n);
  if (family == "harmonic") return graph::PairWeightSpec::harmonic(n, scale);
  if (family == "gray") return graph::PairWeightSpec::gray_hypercube(n);
  throw py::value_error("unknown sorter family: " + family);
}

parallel::MatchingKind matching_kind(const std::string& name) {
  if (name == "structured") return parallel::MatchingKind::StructuredPowerOfTwo;
  if (name == "thinned") return parallel::MatchingKind::ThinnedIid;
  if (name == "dimcut") return parallel::MatchingKind::HypercubeDimCut;
  throw py::value_error("unknown matching sampler: " + name);
}

std::vector<std::pair<Index, Index>> as_tuples(const std::vector<Pair>& pairs) {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(pairs.size());
  for (const Pair& p : pairs) out.emplace_back(p.first, p.second);
  return out;
}

py::dict qalpha_dict(const harness::QAlphaReport& r) {
  py::dict d;
  d["mode"] = r.mode;
  d["n"] = r.n;
  d["p"] = r.p;
  d["alpha"] = r.alpha;
  d["samples"] = r.samples;
  d["passed"] = r.pass;
  d["worst_pair"] = py::make_tuple(r.worst_pair.first, r.worst_pair.second);
  d["worst_q"] = r.worst_q;
  d["worst_sigma"] = r.worst_sigma;
  d["worst_margin"] = r.worst_margin;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Randomized sorting on weighted comparison graphs";

  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<RunStats>(m, "RunStats")
      .def_readonly("sorter", &RunStats::sorter)
      .def_readonly("n", &RunStats::n)
      .def_readonly("trial", &RunStats::trial)
      .def_readonly("seed", &RunStats::seed)
      .def_readonly("comparisons", &RunStats::comparisons)
      .def_readonly("swaps", &RunStats::swaps)
      .def_readonly("rounds", &RunStats::rounds)
      .def_readonly("sim_time", &RunStats::sim_time)
      .def_readonly("sorted", &RunStats::sorted)
      .def_readonly("wall_ns", &RunStats::wall_ns)
      .def_readonly("attempts", &RunStats::attempts)
      .def("__repr__", [](const RunStats& s) {
        std::ostringstream out;
        out << "RunStats(sorter='" << s.sorter << "', n=" << s.n << ", comparisons=" << s.comparisons
            << ", sorted=" << (s.sorted ? "True" : "False") << ")";
        return out.str();
      });

  m.def("total_weight",
        [](const std::string& family, Index n, double scale) {
          return graph::total_weight(weights(family, n, scale));
        },
        py::arg("family"), py::arg("n"), py::arg("scale") = 4.0);

  m.def("pair_probability",
        [](const std::string& family, Index n, Index i, Index j, double scale) {
          return graph::pair_probability(weights(family, n, scale), i, j);
        },
        py::arg("family"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("scale") = 4.0);

  m.def("gray_code", &graph::gray_code, py::arg("i"));
  m.def("is_gray_edge", &graph::is_gray_edge, py::arg("i"), py::arg("j"), py::arg("n"));

  m.def("run_sequential",
        [](std::vector<Key> keys, const std::string& family, std::uint64_t seed,
           std::optional<double> fault, double scale, std::uint64_t max_steps) {
          const graph::EdgeSampler sampler(weights(family, keys.size(), scale));
          const auto model = fault ? engine::FaultModel::constant(*fault) : engine::FaultModel::none();
          if (max_steps == 0) max_steps = engine::default_max_steps(sampler.spec());
          Rng rng(seed);
          py::gil_scoped_release release;
          auto run = engine::run_sequential(std::move(keys), sampler, model, rng, max_steps);
          run.stats.seed = seed;
          return std::make_pair(run.stats, run.keys);
        },
        py::arg("keys"), py::arg("sorter") = "harmonic", py::arg("seed") = 0,
        py::arg("fault") = py::none(), py::arg("scale") = 4.0, py::arg("max_steps") = 0,
        "Runs one sequential sort; returns (RunStats, final keys).");

  m.def("run_experiment",
        [](const std::string& config_json) {
          const auto config = harness::parse_config_json(config_json);
          py::gil_scoped_release release;
          return harness::run_experiment(config);
        },
        py::arg("config_json"), "Runs a JSON experiment config; returns a list of RunStats.");

  m.def("to_csv", [](const std::vector<RunStats>& table) {
    std::ostringstream out;
    harness::write_csv(out, table);
    return out.str();
  });

  m.def("fit_scaling",
        [](const std::vector<RunStats>& table, const std::string& metric) {
          const auto which = metric == "rounds" ? harness::Metric::Rounds : harness::Metric::Comparisons;
          const auto laws = harness::default_laws();
          const auto report = harness::fit_scaling(table, laws, which);
          py::dict flatness;
          for (const auto& f : report.fits) flatness[py::str(harness::law_name(f.law))] = f.flatness;
          py::dict d;
          d["best"] = harness::law_name(report.best());
          d["flatness"] = flatness;
          d["ns"] = report.ns;
          d["means"] = report.means;
          d["loglog_slope"] = report.loglog_slope;
          return d;
        },
        py::arg("table"), py::arg("metric") = "comparisons");

  m.def("structured_matching",
        [](Index n, unsigned k, Index d, unsigned r) {
          return as_tuples(parallel::structured_matching(n, {k, d, r}).pairs);
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("r"));
  m.def("dimcut_matching",
        [](Index n, unsigned k) { return as_tuples(parallel::dimcut_matching(n, k).pairs); },
        py::arg("n"), py::arg("k"));
  m.def("sample_matching",
        [](const std::string& kind, Index n, Index p, std::uint64_t seed) {
          parallel::MatchingSampler sampler({matching_kind(kind), n, p});
          Rng rng(seed);
          return as_tuples(sampler.sample(rng).pairs);
        },
        py::arg("kind"), py::arg("n"), py::arg("p") = 0, py::arg("seed") = 0);
  m.def("exact_structured_marginal", &parallel::exact_structured_marginal, py::arg("n"),
        py::arg("i"), py::arg("j"));

  m.def("verify_qalpha_exact",
        [](Index n, double alpha_scale) { return qalpha_dict(harness::verify_qalpha_exact(n, alpha_scale)); },
        py::arg("n"), py::arg("alpha_scale") = 1.0);
  m.def("verify_qalpha_montecarlo",
        [](const std::string& kind, Index n, Index p, std::uint64_t samples, std::uint64_t seed,
           double alpha_scale) {
          return qalpha_dict(harness::verify_qalpha_montecarlo({matching_kind(kind), n, p}, samples,
                                                               seed, alpha_scale));
        },
        py::arg("kind"), py::arg("n"), py::arg("p") = 0, py::arg("samples") = 100000,
        py::arg("seed") = 0, py::arg("alpha_scale") = 1.0);

  m.def("inversions", [](const std::vector<Key>& x) { return analysis::inversions(x); });
  m.def("threshold_projection",
        [](const std::vector<Key>& x, Index k) { return analysis::threshold_projection(x, k); });
  m.def("lift", [](const std::vector<Key>& x) { return analysis::lift(x); });
  m.def("in_omega", [](const std::vector<Key>& x, unsigned r) { return analysis::in_omega(x, r); });
  m.def("misplaced_counts", [](const std::vector<Key>& x) {
    const auto c = analysis::misplaced_counts(x);
    py::dict d;
    d["misplaced"] = c.misplaced;
    d["zeros_in_upper"] = c.zeros_in_upper;
    d["ones_in_lower"] = c.ones_in_lower;
    d["cumulative_zeros"] = c.cumulative_zeros;
    d["cumulative_ones"] = c.cumulative_ones;
    return d;
  });
  m.def("recurrence_bound_check", &analysis::recurrence_bound_check, py::arg("levels"));
  m.def("coupon_expectation", &analysis::coupon_expectation, py::arg("m"));
  m.def("coupon_tail", &analysis::coupon_tail, py::arg("m"), py::arg("t"));
}
