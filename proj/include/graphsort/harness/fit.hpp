#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphsort/run_stats.hpp"

namespace graphsort::harness {

enum class Law { NSquared, NSquaredLogN, NLogN, NLogSquaredN, LogSquaredN, NCubed };

std::string law_name(Law law);
Law parse_law(const std::string& name);
/// f(n) with natural logarithms.
double law_value(Law law, double n);

std::vector<Law> default_laws();

enum class Metric { Comparisons, Rounds, SimTime };

struct LawFit {
  Law law = Law::NSquared;
  std::vector<double> ratios;  // mean / f(n), one per n
  double flatness = 0.0;       // max(ratios) / min(ratios)
};

struct FitReport {
  std::vector<Index> ns;
  std::vector<double> means;
  std::vector<LawFit> fits;  // flattest first
  double loglog_slope = 0.0;
  Law best() const { return fits.front().law; }
  const LawFit& fit_for(Law law) const;
};

/// Groups runs by n, averages the metric, and scores each candidate law by
/// how flat mean/f(n) is across n. Needs at least four distinct n.
FitReport fit_scaling(std::span<const RunStats> table, std::span<const Law> candidates,
                      Metric metric = Metric::Comparisons);

std::string format_report(const FitReport& report);

}  // namespace graphsort::harness
