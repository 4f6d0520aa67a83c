#pragma once

#include <filesystem>
#include <istream>
#include <optional>

#include "graphsort/graph/weights.hpp"

namespace graphsort::graph {

// Reads "i j weight" lines ('#' starts a comment). When n is not given it is
// one past the largest index seen. Repeated pairs are an error.
PairWeightSpec parse_custom_table(std::istream& in, std::optional<Index> n = std::nullopt);
PairWeightSpec load_custom_table(const std::filesystem::path& path,
                                 std::optional<Index> n = std::nullopt);

}  // namespace graphsort::graph
