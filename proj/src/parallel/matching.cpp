#include "graphsort/parallel/matching.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "graphsort/graph/gray.hpp"

namespace graphsort::parallel {
namespace {

void require_power_of_two(Index n, Index minimum, const char* what) {
  if (!is_power_of_two(n) || n < minimum) {
    throw std::invalid_argument(std::string(what) + ": n must be a power of two >= " +
                                std::to_string(minimum));
  }
}

void check_level(Index n, unsigned k) {
  if (k < 1 || k > floor_log2(n)) throw std::invalid_argument("level k must lie in [1, lg n]");
}

}  // namespace

void validate_matching(std::span<const Pair> pairs, Index n) {
  std::vector<char> seen(n, 0);
  for (const Pair& p : pairs) {
    if (p.first >= n || p.second >= n) throw std::invalid_argument("matching: index out of range");
    if (p.first == p.second) throw std::invalid_argument("matching: degenerate pair");
    if (seen[p.first] || seen[p.second]) {
      throw std::invalid_argument("matching: pairs overlap at a shared endpoint");
    }
    seen[p.first] = seen[p.second] = 1;
  }
}

Index circular_distance(Index n, Index i, Index j) {
  const Index d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

Index structured_block_size(Index n, unsigned k) {
  require_power_of_two(n, 4, "structured matching");
  check_level(n, k);
  return std::max<Index>(1, n >> (k + 1));
}

std::pair<Index, Index> structured_length_range(Index n, unsigned k) {
  require_power_of_two(n, 4, "structured matching");
  check_level(n, k);
  return {(n >> (k + 1)) + 1, n >> k};
}

std::vector<Pair> fundamental_block(Index n, Index d, unsigned k) {
  const Index size = structured_block_size(n, k);
  if (d < 1 || d >= n) throw std::invalid_argument("fundamental_block: d must lie in [1, n)");
  std::vector<Pair> block;
  block.reserve(size);
  for (Index i = 0; i < size; ++i) block.push_back(make_pair_ordered(i, (i + d) % n));
  return block;
}

Matching structured_matching(Index n, StructuredMeta meta) {
  const auto [d_lo, d_hi] = structured_length_range(n, meta.k);
  if (meta.d < d_lo || meta.d > d_hi) {
    throw std::invalid_argument("structured_matching: D outside (n/2^(K+1), n/2^K]");
  }
  if (meta.r > 3) throw std::invalid_argument("structured_matching: R must lie in {0,1,2,3}");

  const Index block = structured_block_size(n, meta.k);
  const Index spacing = 4 * block;
  const Index shift = meta.r * block;
  Matching m;
  m.meta = meta;
  m.pairs.reserve(n / 4);
  for (Index start = 0; start < n; start += spacing) {
    for (Index i = 0; i < block; ++i) {
      const Index a = (start + shift + i) % n;
      m.pairs.push_back(make_pair_ordered(a, (a + meta.d) % n));
    }
  }
  return m;
}

Matching sample_structured_matching(Index n, Rng& rng) {
  require_power_of_two(n, 4, "structured matching");
  std::uniform_int_distribution<unsigned> level(1, floor_log2(n));
  StructuredMeta meta;
  meta.k = level(rng);
  const auto [d_lo, d_hi] = structured_length_range(n, meta.k);
  meta.d = std::uniform_int_distribution<Index>(d_lo, d_hi)(rng);
  meta.r = std::uniform_int_distribution<unsigned>(0, 3)(rng);
  return structured_matching(n, meta);
}

std::vector<StructuredOutcome> enumerate_structured_outcomes(Index n) {
  require_power_of_two(n, 4, "structured matching");
  const unsigned levels = floor_log2(n);
  std::vector<StructuredOutcome> outcomes;
  for (unsigned k = 1; k <= levels; ++k) {
    const auto [d_lo, d_hi] = structured_length_range(n, k);
    const double per = 1.0 / levels / static_cast<double>(d_hi - d_lo + 1) / 4.0;
    for (Index d = d_lo; d <= d_hi; ++d) {
      for (unsigned r = 0; r < 4; ++r) outcomes.push_back({{k, d, r}, per});
    }
  }
  return outcomes;
}

double exact_structured_marginal(Index n, Index i, Index j) {
  if (i >= n || j >= n) throw std::out_of_range("exact_structured_marginal: index out of range");
  if (i == j) throw std::invalid_argument("exact_structured_marginal: i == j");
  const Pair target = make_pair_ordered(i, j);
  double q = 0.0;
  for (const auto& outcome : enumerate_structured_outcomes(n)) {
    const Matching m = structured_matching(n, outcome.meta);
    if (std::find(m.pairs.begin(), m.pairs.end(), target) != m.pairs.end()) {
      q += outcome.probability;
    }
  }
  return q;
}

std::vector<double> exact_structured_marginals(Index n) {
  std::vector<double> q(n * n, 0.0);
  for (const auto& outcome : enumerate_structured_outcomes(n)) {
    for (const Pair& p : structured_matching(n, outcome.meta).pairs) {
      q[p.first * n + p.second] += outcome.probability;
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) q[j * n + i] = q[i * n + j];
  }
  return q;
}

std::vector<bool> retain_disjoint(std::span<const Pair> proposals) {
  std::vector<Index> endpoints;
  endpoints.reserve(2 * proposals.size());
  for (const Pair& p : proposals) {
    endpoints.push_back(p.first);
    endpoints.push_back(p.second);
  }
  std::sort(endpoints.begin(), endpoints.end());
  auto multiplicity = [&](Index v) {
    const auto range = std::equal_range(endpoints.begin(), endpoints.end(), v);
    return range.second - range.first;
  };
  std::vector<bool> retained(proposals.size());
  for (std::size_t k = 0; k < proposals.size(); ++k) {
    retained[k] = multiplicity(proposals[k].first) == 1 && multiplicity(proposals[k].second) == 1;
  }
  return retained;
}

Matching sample_thinned_matching(Index n, Index p, const graph::EdgeSampler& harmonic,
                                 Rng& rng) {
  if (!std::holds_alternative<graph::Harmonic>(harmonic.spec().family) || harmonic.n() != n) {
    throw std::invalid_argument("sample_thinned_matching: needs a harmonic sampler on [n]");
  }
  if (p < 1 || p > n / 4) throw std::invalid_argument("sample_thinned_matching: need 1 <= p <= n/4");
  ThinnedMeta meta;
  meta.proposed.reserve(p);
  for (Index k = 0; k < p; ++k) meta.proposed.push_back(harmonic.sample(rng));
  meta.retained = retain_disjoint(meta.proposed);
  Matching m;
  for (Index k = 0; k < p; ++k) {
    if (meta.retained[k]) m.pairs.push_back(meta.proposed[k]);
  }
  m.meta = std::move(meta);
  return m;
}

Matching dimcut_matching(Index n, unsigned k) {
  require_power_of_two(n, 2, "dimcut matching");
  check_level(n, k);
  const std::uint64_t bit = std::uint64_t{1} << (k - 1);
  Matching m;
  m.meta = DimCutMeta{k};
  m.pairs.reserve(n / 2);
  for (Index i = 0; i < n; ++i) {
    const Index j = graph::gray_inverse(graph::gray_code(i) ^ bit);
    if (i < j) m.pairs.push_back({i, j});
  }
  return m;
}

Matching sample_dimcut_matching(Index n, Rng& rng) {
  require_power_of_two(n, 2, "dimcut matching");
  std::uniform_int_distribution<unsigned> level(1, floor_log2(n));
  return dimcut_matching(n, level(rng));
}

std::uint64_t apply_matching(engine::SortState& state, const Matching& m) {
  validate_matching(m.pairs, state.n());
  std::uint64_t swaps = 0;
  for (const Pair& p : m.pairs) swaps += state.compare_and_sort(p.first, p.second) ? 1 : 0;
  state.count_round();
  return swaps;
}

void validate(const MatchingSamplerSpec& spec) {
  switch (spec.kind) {
    case MatchingKind::StructuredPowerOfTwo:
      require_power_of_two(spec.n, 4, "structured matching");
      break;
    case MatchingKind::HypercubeDimCut:
      require_power_of_two(spec.n, 2, "dimcut matching");
      break;
    case MatchingKind::ThinnedIid:
      if (spec.p < 1 || spec.p > spec.n / 4) {
        throw std::invalid_argument("thinned matching: need 1 <= p <= n/4");
      }
      break;
  }
}

std::string kind_name(MatchingKind kind) {
  switch (kind) {
    case MatchingKind::StructuredPowerOfTwo:
      return "structured";
    case MatchingKind::ThinnedIid:
      return "thinned";
    case MatchingKind::HypercubeDimCut:
      return "dimcut";
  }
  return "?";
}

MatchingSampler::MatchingSampler(MatchingSamplerSpec spec) : spec_(spec) {
  validate(spec_);
  if (spec_.kind == MatchingKind::ThinnedIid) {
    harmonic_.emplace(graph::PairWeightSpec::harmonic(spec_.n, 1.0));
  }
}

Matching MatchingSampler::sample(Rng& rng) const {
  switch (spec_.kind) {
    case MatchingKind::StructuredPowerOfTwo:
      return sample_structured_matching(spec_.n, rng);
    case MatchingKind::ThinnedIid:
      return sample_thinned_matching(spec_.n, spec_.p, *harmonic_, rng);
    case MatchingKind::HypercubeDimCut:
      return sample_dimcut_matching(spec_.n, rng);
  }
  return {};
}

std::uint64_t default_max_rounds(const MatchingSamplerSpec& spec) {
  const std::uint64_t lg = std::max(1u, ceil_log2(spec.n));
  std::uint64_t rounds = 256 * lg * lg;
  if (spec.kind == MatchingKind::ThinnedIid) rounds *= (spec.n + spec.p - 1) / spec.p;
  return rounds;
}

ParallelRun run_parallel(std::vector<Key> initial, const MatchingSampler& sampler, Rng& rng,
                         std::uint64_t max_rounds) {
  if (initial.size() != sampler.spec().n) {
    throw std::invalid_argument("run_parallel: input length differs from sampler n");
  }
  if (max_rounds == 0) throw std::invalid_argument("run_parallel: max_rounds must be positive");

  const auto start = std::chrono::steady_clock::now();
  engine::SortState state(std::move(initial));
  while (!state.is_sorted() && state.rounds() < max_rounds) {
    apply_matching(state, sampler.sample(rng));
  }

  ParallelRun run;
  RunStats& stats = run.stats;
  stats.sorter = kind_name(sampler.spec().kind);
  stats.n = state.n();
  stats.rounds = state.rounds();
  stats.comparisons = state.steps();
  stats.attempts = state.steps();
  stats.swaps = state.swaps();
  run.keys = std::move(state).take_keys();
  stats.sorted = graphsort::is_sorted(run.keys);
  stats.status = stats.sorted ? RunStatus::Sorted : RunStatus::BudgetExhausted;
  stats.terminal_hash = hash_keys(run.keys);
  stats.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return run;
}

}  // namespace graphsort::parallel
