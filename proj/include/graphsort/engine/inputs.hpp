#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "graphsort/types.hpp"

namespace graphsort::engine {

enum class InputKind { Reverse, Alternating, RandomPermutation, ZeroOneBalancedWorst, File };

struct InputSpec {
  InputKind kind = InputKind::Reverse;
  std::filesystem::path path;  // File only
};

/// Accepts reverse, alternating, random-permutation (or random),
/// zero-one-balanced-worst, and file:PATH / custom:PATH.
InputSpec parse_input_spec(const std::string& text);
std::string input_name(const InputSpec& spec);

/// Permutation generators produce values 1..n. reverse is (n, ..., 1);
/// alternating is (2, 1, 4, 3, ...) with a trailing n when n is odd;
/// zero-one-balanced-worst is floor(n/2) ones followed by zeros. File inputs
/// ignore n.
std::vector<Key> make_input(const InputSpec& spec, Index n, Rng& rng);

/// One unsigned integer per line; blank lines and '#' comments are skipped.
std::vector<Key> load_keys(const std::filesystem::path& path);

}  // namespace graphsort::engine
