#pragma once

// Array-based generators used as benchmark baselines.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace llperm::baseline {

/// Heap's algorithm, iterative form. Visits `values.size()`! arrangements
/// (one for an empty or single-element vector).
template <class T, class Visitor>
void heap_permutations(std::vector<T>& values, Visitor&& visit) {
  const std::size_t n = values.size();
  std::vector<std::size_t> counters(n, 0);
  visit(std::span<const T>(values));
  std::size_t i = 1;
  while (i < n) {
    if (counters[i] < i) {
      using std::swap;
      swap(values[i % 2 == 0 ? 0 : counters[i]], values[i]);
      visit(std::span<const T>(values));
      ++counters[i];
      i = 1;
    } else {
      counters[i] = 0;
      ++i;
    }
  }
}

/// Lexicographic order via std::next_permutation, starting from sorted input.
template <class T, class Visitor>
void lexicographic_permutations(std::vector<T>& values, Visitor&& visit) {
  std::sort(values.begin(), values.end());
  do {
    visit(std::span<const T>(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace llperm::baseline
