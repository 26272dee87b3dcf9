#pragma once

// Reference tables: the full generation order for length 4, the final
// arrangement of a traversal for lengths 0..12, and the ranks of the
// reversals for lengths 1..12.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace llperm::fixtures {

using Perm = std::vector<std::size_t>;

inline const std::vector<Perm> kOrderLength4 = {
    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 3, 1, 2}, {0, 3, 2, 1}, {0, 2, 3, 1}, {0, 2, 1, 3},
    {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 3, 0, 1}, {2, 3, 1, 0}, {2, 1, 3, 0}, {2, 1, 0, 3},
    {3, 2, 1, 0}, {3, 2, 0, 1}, {3, 0, 2, 1}, {3, 0, 1, 2}, {3, 1, 0, 2}, {3, 1, 2, 0},
    {1, 3, 2, 0}, {1, 3, 0, 2}, {1, 0, 3, 2}, {1, 0, 2, 3}, {1, 2, 0, 3}, {1, 2, 3, 0},
};

inline const std::vector<Perm> kLastPermutation = {
    {},
    {0},
    {1, 0},
    {1, 0, 2},
    {1, 2, 3, 0},
    {1, 0, 2, 3, 4},
    {1, 4, 3, 5, 2, 0},
    {1, 0, 2, 3, 4, 5, 6},
    {1, 4, 3, 5, 6, 7, 2, 0},
    {1, 0, 2, 3, 4, 5, 6, 7, 8},
    {1, 4, 3, 5, 6, 7, 8, 9, 2, 0},
    {1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {1, 4, 3, 5, 6, 7, 8, 9, 10, 11, 2, 0},
};

inline const std::vector<std::uint64_t> kReversalIndices = {
    0, 1, 3, 12, 74, 317, 4167, 14244, 316634, 1042397, 35878887, 115712484,
};

inline Perm identity(std::size_t k) {
  Perm p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = i;
  return p;
}

// Pair-counting Kendall tau through std::find, kept separate from the
// library's implementation.
inline std::uint64_t brute_kendall(const Perm& a, const Perm& b) {
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      auto bx = std::find(b.begin(), b.end(), a[x]);
      auto by = std::find(b.begin(), b.end(), a[y]);
      if (bx > by) ++count;
    }
  }
  return count;
}

}  // namespace llperm::fixtures
