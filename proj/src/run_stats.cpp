#include "graphsort/run_stats.hpp"

namespace graphsort {

bool is_sorted(std::span<const Key> keys) {
  for (std::size_t k = 1; k < keys.size(); ++k) {
    if (keys[k - 1] > keys[k]) return false;
  }
  return true;
}

std::uint64_t hash_keys(std::span<const Key> keys) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Key key : keys) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (key >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

}  // namespace graphsort
