#include "graphsort/analysis/zero_one.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "graphsort/run_stats.hpp"

namespace graphsort::analysis {

std::vector<Key> threshold_projection(std::span<const Key> x, Index k) {
  const Index n = x.size();
  if (k > n) throw std::out_of_range("threshold_projection: k exceeds length");
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return x[a] != x[b] ? x[a] > x[b] : a > b;
  });
  std::vector<Key> projected(n, 0);
  for (Index r = 0; r < k; ++r) projected[order[r]] = 1;
  return projected;
}

void apply_comparators(std::span<Key> keys, std::span<const Pair> comparators) {
  for (const Pair& c : comparators) {
    if (c.first >= c.second || c.second >= keys.size()) {
      throw std::invalid_argument("apply_comparators: comparator must satisfy i < j < n");
    }
    if (keys[c.first] > keys[c.second]) std::swap(keys[c.first], keys[c.second]);
  }
}

ZeroOneReport zero_one_oracle(std::span<const Pair> comparators, std::span<const Key> x) {
  ZeroOneReport report;
  std::vector<Key> out(x.begin(), x.end());
  apply_comparators(out, comparators);
  report.sorts_input = is_sorted(out);

  // k splits a group of equal keys when the k-th and (k+1)-th largest
  // coincide; such projections depend on the tie rule and are skipped.
  std::vector<Key> desc(x.begin(), x.end());
  std::sort(desc.begin(), desc.end(), std::greater<>());

  report.sorts_all_projections = true;
  for (Index k = 0; k <= x.size(); ++k) {
    if (k > 0 && k < x.size() && desc[k - 1] == desc[k]) continue;
    std::vector<Key> projected = threshold_projection(x, k);
    apply_comparators(projected, comparators);
    if (!is_sorted(projected)) {
      report.sorts_all_projections = false;
      report.first_unsorted_projection = k;
      break;
    }
  }
  report.agree = report.sorts_input == report.sorts_all_projections;
  return report;
}

namespace {

Index count_ones_checked(std::span<const Key> x) {
  if (x.empty()) throw std::invalid_argument("lift: empty sequence");
  Index ones = 0;
  for (Key v : x) {
    if (v > 1) throw std::invalid_argument("lift: sequence is not 0-1 valued");
    ones += v;
  }
  return ones;
}

}  // namespace

Index lift_offset(std::span<const Key> x) {
  const Index ones = count_ones_checked(x);
  return (Index{1} << ceil_log2(x.size())) - x.size() + ones;
}

std::vector<Key> lift(std::span<const Key> x) {
  const Index ones = count_ones_checked(x);
  const Index half = Index{1} << ceil_log2(x.size());
  const Index leading = half - x.size() + ones;
  const Index trailing = half - ones;
  std::vector<Key> lifted;
  lifted.reserve(2 * half);
  lifted.insert(lifted.end(), leading, 0);
  lifted.insert(lifted.end(), x.begin(), x.end());
  lifted.insert(lifted.end(), trailing, 1);
  return lifted;
}

}  // namespace graphsort::analysis
