#include "graphsort/graph/custom_table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace graphsort::graph {

PairWeightSpec parse_custom_table(std::istream& in, std::optional<Index> n) {
  std::map<Pair, double> weights;
  Index max_index = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long i = 0, j = 0;
    double w = 0.0;
    if (!(fields >> i)) continue;  // blank or comment-only
    if (!(fields >> j >> w) || i < 0 || j < 0) {
      throw std::invalid_argument("custom table line " + std::to_string(line_no) +
                                  ": expected 'i j weight'");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("custom table line " + std::to_string(line_no) +
                                  ": trailing fields");
    }
    if (i == j) {
      throw std::invalid_argument("custom table line " + std::to_string(line_no) +
                                  ": self-loop");
    }
    const Pair p = make_pair_ordered(static_cast<Index>(i), static_cast<Index>(j));
    if (!weights.emplace(p, w).second) {
      throw std::invalid_argument("custom table line " + std::to_string(line_no) +
                                  ": duplicate pair");
    }
    max_index = std::max(max_index, p.second);
  }
  PairWeightSpec spec = PairWeightSpec::custom(n.value_or(max_index + 1), std::move(weights));
  validate(spec);
  return spec;
}

PairWeightSpec load_custom_table(const std::filesystem::path& path, std::optional<Index> n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open custom table: " + path.string());
  return parse_custom_table(in, n);
}

}  // namespace graphsort::graph
