#pragma once

#include <map>
#include <string>
#include <variant>

#include "graphsort/types.hpp"

namespace graphsort::graph {

/// Complete graph, every pair weight 1.
struct Uniform {};
/// Path graph, w(i, i+1) = 1.
struct Adjacent {};
/// w(i, j) = scale / |j - i|.
struct Harmonic {
  double scale = 4.0;
};
/// Hypercube with positions relabelled by their Gray code, unit weights.
struct GrayHypercube {};
/// Explicit weights on unordered pairs; absent pairs have weight 0.
struct CustomTable {
  std::map<Pair, double> weights;
};

using Family = std::variant<Uniform, Adjacent, Harmonic, GrayHypercube, CustomTable>;

/// Declarative comparator graph on positions [0, n).
struct PairWeightSpec {
  Family family;
  Index n = 0;

  static PairWeightSpec uniform(Index n) { return {Uniform{}, n}; }
  static PairWeightSpec adjacent(Index n) { return {Adjacent{}, n}; }
  static PairWeightSpec harmonic(Index n, double scale = 4.0) { return {Harmonic{scale}, n}; }
  static PairWeightSpec gray_hypercube(Index n) { return {GrayHypercube{}, n}; }
  static PairWeightSpec custom(Index n, std::map<Pair, double> weights) {
    return {CustomTable{std::move(weights)}, n};
  }
};

/// Throws std::invalid_argument if the spec violates its invariants.
void validate(const PairWeightSpec& spec);

/// Short family name: uniform, adjacent, harmonic, gray, custom.
std::string family_name(const PairWeightSpec& spec);

/// True for families whose weight depends only on |j - i|.
bool is_distance_symmetric(const PairWeightSpec& spec);

/// w({i, j}); argument order does not matter. Throws on i == j or
/// out-of-range indices.
double pair_weight(const PairWeightSpec& spec, Index i, Index j);

/// Weight of a single pair at linear distance d, for distance-symmetric
/// families.
double distance_weight(const PairWeightSpec& spec, Index d);

/// w(E), the sum of all pair weights. Harmonic uses compensated summation.
double total_weight(const PairWeightSpec& spec);

/// w({i, j}) / w(E).
double pair_probability(const PairWeightSpec& spec, Index i, Index j);

/// Whether the non-null edges connect all of [n].
bool is_connected(const PairWeightSpec& spec);

}  // namespace graphsort::graph
