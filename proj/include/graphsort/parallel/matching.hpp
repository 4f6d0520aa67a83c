#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "graphsort/engine/sort_state.hpp"
#include "graphsort/graph/sampler.hpp"
#include "graphsort/run_stats.hpp"

namespace graphsort::parallel {

/// (K, D, R) of a structured power-of-two matching.
struct StructuredMeta {
  unsigned k = 0;
  Index d = 0;
  unsigned r = 0;

  friend bool operator==(const StructuredMeta&, const StructuredMeta&) = default;
};

/// The p iid proposals and which of them survived.
struct ThinnedMeta {
  std::vector<Pair> proposed;
  std::vector<bool> retained;
};

/// Gray-code bit (1-based) flipped by every pair.
struct DimCutMeta {
  unsigned k = 0;
};

/// Vertex-disjoint set of position pairs. Pairs are stored in linear order
/// (first < second) even when generated with wrap-around arithmetic.
struct Matching {
  std::vector<Pair> pairs;
  std::variant<std::monostate, StructuredMeta, ThinnedMeta, DimCutMeta> meta;
};

/// Throws std::invalid_argument on repeated endpoints, degenerate pairs or
/// indices >= n.
void validate_matching(std::span<const Pair> pairs, Index n);

/// min(|j - i|, n - |j - i|).
Index circular_distance(Index n, Index i, Index j);

// ---- structured sampler (n = 2^N, n/4 pairs per matching) ----

/// Edges per block at level k: n / 2^(k+1), clamped to 1 at k = lg n.
Index structured_block_size(Index n, unsigned k);

/// Admissible edge lengths at level k: the integers in (n/2^(k+1), n/2^k].
std::pair<Index, Index> structured_length_range(Index n, unsigned k);

/// {i, i + d mod n} for i in [0, structured_block_size(n, k)).
std::vector<Pair> fundamental_block(Index n, Index d, unsigned k);

/// The matching M_r for fixed (K, D, R).
Matching structured_matching(Index n, StructuredMeta meta);

/// K ~ Unif{1..lg n}, D ~ Unif(length range of K), R ~ Unif{0..3}.
Matching sample_structured_matching(Index n, Rng& rng);

struct StructuredOutcome {
  StructuredMeta meta;
  double probability = 0.0;
};

/// Every (K, D, R) with its probability.
std::vector<StructuredOutcome> enumerate_structured_outcomes(Index n);

/// Pr[{i, j} in M], summed over the exhaustive outcome list.
double exact_structured_marginal(Index n, Index i, Index j);

/// Row-major n x n table of all exact marginals (symmetric, zero diagonal).
std::vector<double> exact_structured_marginals(Index n);

// ---- thinned iid sampler ----

/// Retention rule: a proposal survives iff it shares no endpoint with any
/// other proposal. Identical proposals conflict with each other.
std::vector<bool> retain_disjoint(std::span<const Pair> proposals);

/// p iid draws from a harmonic sampler, thinned by retain_disjoint.
Matching sample_thinned_matching(Index n, Index p, const graph::EdgeSampler& harmonic,
                                 Rng& rng);

// ---- hypercube dimension cuts ----

/// Pairs i < j whose Gray codes differ exactly in bit k (1-based).
Matching dimcut_matching(Index n, unsigned k);
Matching sample_dimcut_matching(Index n, Rng& rng);

// ---- rounds ----

/// Compare-exchanges every pair of m (after validation) and counts one round.
/// Returns the number of swaps.
std::uint64_t apply_matching(engine::SortState& state, const Matching& m);

enum class MatchingKind { StructuredPowerOfTwo, ThinnedIid, HypercubeDimCut };

struct MatchingSamplerSpec {
  MatchingKind kind = MatchingKind::StructuredPowerOfTwo;
  Index n = 0;
  Index p = 0;  // ThinnedIid only
};

void validate(const MatchingSamplerSpec& spec);
std::string kind_name(MatchingKind kind);

/// Holds whatever a matching law needs between draws (the harmonic pair
/// sampler for ThinnedIid).
class MatchingSampler {
 public:
  explicit MatchingSampler(MatchingSamplerSpec spec);

  const MatchingSamplerSpec& spec() const { return spec_; }
  Matching sample(Rng& rng) const;

 private:
  MatchingSamplerSpec spec_;
  std::optional<graph::EdgeSampler> harmonic_;
};

/// 256 ceil(lg n)^2, times ceil(n/p) for ThinnedIid.
std::uint64_t default_max_rounds(const MatchingSamplerSpec& spec);

struct ParallelRun {
  RunStats stats;
  std::vector<Key> keys;
};

/// Sample-and-apply rounds until sorted or max_rounds. comparisons is the
/// total size of the applied matchings.
ParallelRun run_parallel(std::vector<Key> initial, const MatchingSampler& sampler, Rng& rng,
                         std::uint64_t max_rounds);

}  // namespace graphsort::parallel
