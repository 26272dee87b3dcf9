#pragma once

// Kendall tau transition analysis of the generation order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "llperm/ranking.hpp"

namespace llperm {

/// Largest length measure_traversal enumerates without an explicit override.
inline constexpr std::size_t kEnumerationGuard = 13;

/// Number of element pairs whose relative order differs between `a` and `b`.
/// O(k^2). Throws std::invalid_argument unless `a` and `b` are permutations
/// of the same set of distinct elements.
template <class T>
std::uint64_t kendall_tau(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("kendall_tau: sequences differ in length");
  }
  const std::size_t k = a.size();
  // position_in_b[i]: where a[i] sits in b
  std::vector<std::size_t> position_in_b(k);
  std::vector<bool> used(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t found = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == a[i]) {
        if (found != k) throw std::invalid_argument("kendall_tau: repeated element");
        found = j;
      }
    }
    if (found == k || used[found]) {
      throw std::invalid_argument("kendall_tau: sequences are not permutations of each other");
    }
    used[found] = true;
    position_in_b[i] = found;
  }
  std::uint64_t discordant = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (position_in_b[i] > position_in_b[j]) ++discordant;
    }
  }
  return discordant;
}

template <class T>
std::uint64_t kendall_tau(const std::vector<T>& a, const std::vector<T>& b) {
  return kendall_tau(std::span<const T>(a), std::span<const T>(b));
}

struct DistanceStats {
  std::size_t k = 0;
  RankIndex cumulative = 0;   // sum of per-transition distances
  RankIndex transitions = 0;  // k! - 1
  double average = 0.0;       // cumulative / transitions, 0 when there are none
  std::map<std::uint64_t, std::uint64_t> histogram;  // distance -> transition count

  std::uint64_t adjacent_swaps() const;
};

/// Enumerates the traversal of the identity of length k and sums the Kendall
/// tau distance of every consecutive pair.
DistanceStats measure_traversal(std::size_t k, std::size_t guard = kEnumerationGuard);

/// D_1 = 0; D_k = k D_{k-1} + 1 + (k-3)(k-1) + 1 for even k, k D_{k-1} + (k-1) for odd k.
RankIndex recurrence_distance(std::size_t k);

/// recurrence_distance(k) / (k! - 1) in double precision; 0 for k < 2.
double recurrence_average(std::size_t k);

/// 7 cosh(1) - 4 sinh(1) - 5.
double average_distance_limit();

/// Fraction of transitions with Kendall tau distance 1.
double adjacent_swap_fraction(std::size_t k, std::size_t guard = kEnumerationGuard);

}  // namespace llperm
