#include "graphsort/engine/sort_state.hpp"

#include <stdexcept>
#include <utility>

namespace graphsort::engine {

SortState::SortState(std::vector<Key> keys) : keys_(std::move(keys)) {
  for (std::size_t k = 1; k < keys_.size(); ++k) {
    if (keys_[k - 1] > keys_[k]) ++descents_;
  }
}

// Descents at boundaries (i-1,i), (i,i+1), (j-1,j), (j,j+1), each counted once.
std::size_t SortState::descents_near(Index i, Index j) const {
  const Index n = keys_.size();
  Index boundaries[4];
  int count = 0;
  auto push = [&](Index left) {
    if (left + 1 >= n) return;
    for (int b = 0; b < count; ++b) {
      if (boundaries[b] == left) return;
    }
    boundaries[count++] = left;
  };
  if (i > 0) push(i - 1);
  push(i);
  if (j > 0) push(j - 1);
  push(j);
  std::size_t d = 0;
  for (int b = 0; b < count; ++b) {
    if (keys_[boundaries[b]] > keys_[boundaries[b] + 1]) ++d;
  }
  return d;
}

bool SortState::compare_and_sort(Index i, Index j) {
  if (j >= keys_.size()) throw std::out_of_range("compare_and_sort: index out of range");
  if (i >= j) throw std::invalid_argument("compare_and_sort: requires i < j");
  ++steps_;
  if (keys_[i] <= keys_[j]) return false;
  const std::size_t before = descents_near(i, j);
  std::swap(keys_[i], keys_[j]);
  descents_ = descents_ - before + descents_near(i, j);
  ++swaps_;
  return true;
}

}  // namespace graphsort::engine
