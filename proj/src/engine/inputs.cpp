#include "graphsort/engine/inputs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace graphsort::engine {

InputSpec parse_input_spec(const std::string& text) {
  if (text == "reverse") return {InputKind::Reverse, {}};
  if (text == "alternating") return {InputKind::Alternating, {}};
  if (text == "random" || text == "random-permutation") return {InputKind::RandomPermutation, {}};
  if (text == "zero-one-balanced-worst") return {InputKind::ZeroOneBalancedWorst, {}};
  for (const std::string prefix : {"file:", "custom:"}) {
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
      return {InputKind::File, text.substr(prefix.size())};
    }
  }
  throw std::invalid_argument("unknown input kind: " + text);
}

std::string input_name(const InputSpec& spec) {
  switch (spec.kind) {
    case InputKind::Reverse:
      return "reverse";
    case InputKind::Alternating:
      return "alternating";
    case InputKind::RandomPermutation:
      return "random-permutation";
    case InputKind::ZeroOneBalancedWorst:
      return "zero-one-balanced-worst";
    case InputKind::File:
      return "file:" + spec.path.string();
  }
  return "?";
}

std::vector<Key> make_input(const InputSpec& spec, Index n, Rng& rng) {
  if (spec.kind == InputKind::File) return load_keys(spec.path);
  std::vector<Key> keys(n);
  switch (spec.kind) {
    case InputKind::Reverse:
      for (Index i = 0; i < n; ++i) keys[i] = n - i;
      break;
    case InputKind::Alternating:
      for (Index i = 0; i < n; ++i) keys[i] = i + 1;
      for (Index i = 0; i + 1 < n; i += 2) std::swap(keys[i], keys[i + 1]);
      break;
    case InputKind::RandomPermutation:
      std::iota(keys.begin(), keys.end(), Key{1});
      std::shuffle(keys.begin(), keys.end(), rng);
      break;
    case InputKind::ZeroOneBalancedWorst:
      std::fill(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n / 2), Key{1});
      break;
    case InputKind::File:
      break;
  }
  return keys;
}

std::vector<Key> load_keys(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path.string());
  std::vector<Key> keys;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::runtime_error("input file: not an unsigned integer: " + token);
    }
    keys.push_back(std::stoull(token));
  }
  if (keys.empty()) throw std::runtime_error("input file is empty: " + path.string());
  return keys;
}

}  // namespace graphsort::engine
