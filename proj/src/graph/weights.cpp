#include "graphsort/graph/weights.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graphsort/graph/gray.hpp"

namespace graphsort::graph {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void check_pair(const PairWeightSpec& spec, Index i, Index j) {
  if (i >= spec.n || j >= spec.n) throw std::out_of_range("pair index out of range");
  if (i == j) throw std::invalid_argument("pair endpoints must differ");
}

}  // namespace

void validate(const PairWeightSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("PairWeightSpec: n must be at least 2");
  std::visit(Overloaded{
                 [](const Uniform&) {},
                 [](const Adjacent&) {},
                 [](const Harmonic& h) {
                   if (!(h.scale > 0.0) || !std::isfinite(h.scale)) {
                     throw std::invalid_argument("Harmonic: scale must be positive and finite");
                   }
                 },
                 [&](const GrayHypercube&) {
                   if (!is_power_of_two(spec.n)) {
                     throw std::invalid_argument("GrayHypercube: n must be a power of two");
                   }
                 },
                 [&](const CustomTable& t) {
                   bool any_positive = false;
                   for (const auto& [pair, w] : t.weights) {
                     if (pair.first >= pair.second || pair.second >= spec.n) {
                       throw std::invalid_argument("CustomTable: pair must satisfy i < j < n");
                     }
                     if (!std::isfinite(w) || w < 0.0) {
                       throw std::invalid_argument("CustomTable: weights must be finite and nonnegative");
                     }
                     any_positive = any_positive || w > 0.0;
                   }
                   if (!any_positive) throw std::invalid_argument("CustomTable: all weights are zero");
                 },
             },
             spec.family);
}

std::string family_name(const PairWeightSpec& spec) {
  return std::visit(Overloaded{
                        [](const Uniform&) { return std::string("uniform"); },
                        [](const Adjacent&) { return std::string("adjacent"); },
                        [](const Harmonic&) { return std::string("harmonic"); },
                        [](const GrayHypercube&) { return std::string("gray"); },
                        [](const CustomTable&) { return std::string("custom"); },
                    },
                    spec.family);
}

bool is_distance_symmetric(const PairWeightSpec& spec) {
  return std::holds_alternative<Uniform>(spec.family) ||
         std::holds_alternative<Adjacent>(spec.family) ||
         std::holds_alternative<Harmonic>(spec.family);
}

double distance_weight(const PairWeightSpec& spec, Index d) {
  if (d == 0 || d >= spec.n) throw std::out_of_range("distance out of range");
  return std::visit(Overloaded{
                        [](const Uniform&) { return 1.0; },
                        [d](const Adjacent&) { return d == 1 ? 1.0 : 0.0; },
                        [d](const Harmonic& h) { return h.scale / static_cast<double>(d); },
                        [](const GrayHypercube&) -> double {
                          throw std::invalid_argument("GrayHypercube is not distance-symmetric");
                        },
                        [](const CustomTable&) -> double {
                          throw std::invalid_argument("CustomTable is not distance-symmetric");
                        },
                    },
                    spec.family);
}

double pair_weight(const PairWeightSpec& spec, Index i, Index j) {
  check_pair(spec, i, j);
  const Pair p = make_pair_ordered(i, j);
  if (const auto* g = std::get_if<GrayHypercube>(&spec.family)) {
    (void)g;
    return is_gray_edge(p.first, p.second, spec.n) ? 1.0 : 0.0;
  }
  if (const auto* t = std::get_if<CustomTable>(&spec.family)) {
    const auto it = t->weights.find(p);
    return it == t->weights.end() ? 0.0 : it->second;
  }
  return distance_weight(spec, p.second - p.first);
}

double total_weight(const PairWeightSpec& spec) {
  validate(spec);
  const double n = static_cast<double>(spec.n);
  return std::visit(Overloaded{
                        [n](const Uniform&) { return n * (n - 1.0) / 2.0; },
                        [n](const Adjacent&) { return n - 1.0; },
                        [&](const Harmonic& h) {
                          CompensatedSum sum;
                          for (Index d = 1; d < spec.n; ++d) {
                            sum.add(static_cast<double>(spec.n - d) / static_cast<double>(d));
                          }
                          return h.scale * sum.value();
                        },
                        [&](const GrayHypercube&) {
                          return n / 2.0 * static_cast<double>(floor_log2(spec.n));
                        },
                        [](const CustomTable& t) {
                          CompensatedSum sum;
                          for (const auto& entry : t.weights) sum.add(entry.second);
                          return sum.value();
                        },
                    },
                    spec.family);
}

double pair_probability(const PairWeightSpec& spec, Index i, Index j) {
  const double total = total_weight(spec);
  return pair_weight(spec, i, j) / total;
}

bool is_connected(const PairWeightSpec& spec) {
  validate(spec);
  const auto* table = std::get_if<CustomTable>(&spec.family);
  if (table == nullptr) return true;

  std::vector<Index> parent(spec.n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Index components = spec.n;
  for (const auto& [pair, w] : table->weights) {
    if (w <= 0.0) continue;
    const Index a = find(pair.first), b = find(pair.second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace graphsort::graph
