#include "graphsort/harness/fit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace graphsort::harness {

std::string law_name(Law law) {
  switch (law) {
    case Law::NSquared: return "n^2";
    case Law::NSquaredLogN: return "n^2 log n";
    case Law::NLogN: return "n log n";
    case Law::NLogSquaredN: return "n (log n)^2";
    case Law::LogSquaredN: return "(log n)^2";
    case Law::NCubed: return "n^3";
  }
  return "?";
}

Law parse_law(const std::string& name) {
  for (Law law : default_laws()) {
    if (law_name(law) == name) return law;
  }
  throw std::invalid_argument("unknown law: " + name);
}

double law_value(Law law, double n) {
  const double l = std::log(n);
  switch (law) {
    case Law::NSquared: return n * n;
    case Law::NSquaredLogN: return n * n * l;
    case Law::NLogN: return n * l;
    case Law::NLogSquaredN: return n * l * l;
    case Law::LogSquaredN: return l * l;
    case Law::NCubed: return n * n * n;
  }
  return 0.0;
}

std::vector<Law> default_laws() {
  return {Law::NSquared,     Law::NSquaredLogN, Law::NLogN,
          Law::NLogSquaredN, Law::LogSquaredN,  Law::NCubed};
}

const LawFit& FitReport::fit_for(Law law) const {
  for (const LawFit& f : fits) {
    if (f.law == law) return f;
  }
  throw std::invalid_argument("law not fitted: " + law_name(law));
}

FitReport fit_scaling(std::span<const RunStats> table, std::span<const Law> candidates,
                      Metric metric) {
  if (candidates.empty()) throw std::invalid_argument("no candidate laws");
  std::map<Index, std::pair<double, std::uint64_t>> groups;
  for (const RunStats& s : table) {
    double v = 0.0;
    switch (metric) {
      case Metric::Comparisons: v = static_cast<double>(s.comparisons); break;
      case Metric::Rounds: v = static_cast<double>(s.rounds); break;
      case Metric::SimTime: v = s.sim_time; break;
    }
    auto& [sum, count] = groups[s.n];
    sum += v;
    ++count;
  }
  if (groups.size() < 4) {
    throw std::invalid_argument("insufficient data: need at least four distinct n, have " +
                                std::to_string(groups.size()));
  }

  FitReport report;
  for (const auto& [n, acc] : groups) {
    if (n < 2) throw std::invalid_argument("insufficient data: n must be at least 2");
    report.ns.push_back(n);
    report.means.push_back(acc.first / static_cast<double>(acc.second));
  }

  for (Law law : candidates) {
    LawFit fit{law, {}, 0.0};
    for (std::size_t i = 0; i < report.ns.size(); ++i) {
      fit.ratios.push_back(report.means[i] / law_value(law, static_cast<double>(report.ns[i])));
    }
    const auto [lo, hi] = std::minmax_element(fit.ratios.begin(), fit.ratios.end());
    fit.flatness = *lo > 0.0 ? *hi / *lo : INFINITY;
    report.fits.push_back(std::move(fit));
  }
  std::stable_sort(report.fits.begin(), report.fits.end(),
                   [](const LawFit& a, const LawFit& b) { return a.flatness < b.flatness; });

  // Least-squares slope of log(mean) against log(n).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(report.ns.size());
  for (std::size_t i = 0; i < report.ns.size(); ++i) {
    const double x = std::log(static_cast<double>(report.ns[i]));
    const double y = std::log(std::max(report.means[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.loglog_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return report;
}

std::string format_report(const FitReport& report) {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "n:";
  for (Index n : report.ns) out << ' ' << n;
  out << "\nmean:";
  for (double v : report.means) out << ' ' << v;
  out << "\nlog-log slope: " << report.loglog_slope << '\n';
  for (const LawFit& f : report.fits) {
    out << std::left << std::setw(12) << law_name(f.law) << " flatness " << f.flatness
        << "  ratios";
    for (double r : f.ratios) out << ' ' << r;
    out << '\n';
  }
  out << "best: " << law_name(report.best()) << '\n';
  return out.str();
}

}  // namespace graphsort::harness
