#include "graphsort/graph/gray.hpp"

#include <bit>
#include <stdexcept>

namespace graphsort::graph {

bool is_gray_edge(Index i, Index j, Index n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("is_gray_edge: n must be a power of two");
  if (i >= n || j >= n) throw std::out_of_range("is_gray_edge: index out of range");
  if (i == j) throw std::invalid_argument("is_gray_edge: i == j");
  return std::popcount(gray_code(i) ^ gray_code(j)) == 1;
}

}  // namespace graphsort::graph
