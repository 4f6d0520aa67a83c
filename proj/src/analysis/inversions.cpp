#include "graphsort/analysis/inversions.hpp"

#include <vector>

namespace graphsort::analysis {
namespace {

std::uint64_t sort_and_count(std::vector<Key>& a, std::vector<Key>& buffer, std::size_t lo,
                             std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = sort_and_count(a, buffer, lo, mid) + sort_and_count(a, buffer, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      count += mid - i;  // a[j] is below every remaining left element
      buffer[out++] = a[j++];
    } else {
      buffer[out++] = a[i++];
    }
  }
  while (i < mid) buffer[out++] = a[i++];
  while (j < hi) buffer[out++] = a[j++];
  for (std::size_t k = lo; k < hi; ++k) a[k] = buffer[k];
  return count;
}

}  // namespace

std::uint64_t inversions(std::span<const Key> x) {
  std::vector<Key> a(x.begin(), x.end());
  std::vector<Key> buffer(a.size());
  return sort_and_count(a, buffer, 0, a.size());
}

}  // namespace graphsort::analysis
