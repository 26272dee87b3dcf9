#include "llperm/metrics.hpp"

#include <cmath>
#include <string>

#include "llperm/generator.hpp"

namespace llperm {

std::uint64_t DistanceStats::adjacent_swaps() const {
  auto it = histogram.find(1);
  return it == histogram.end() ? 0 : it->second;
}

DistanceStats measure_traversal(std::size_t k, std::size_t guard) {
  if (k < 1) throw std::invalid_argument("measure_traversal: k must be at least 1");
  if (k > guard) {
    throw std::invalid_argument("measure_traversal: k = " + std::to_string(k) +
                                " exceeds the enumeration guard " + std::to_string(guard));
  }
  DistanceStats stats;
  stats.k = k;

  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(k));
  std::vector<std::size_t> previous;
  std::vector<std::size_t> current;
  previous.reserve(k);
  current.reserve(k);
  std::uint64_t cumulative = 0;
  std::uint64_t transitions = 0;
  bool first = true;
  visit_permutations(seq, [&](const PermutationView<std::size_t>& view) {
    current.assign(view.begin(), view.end());
    if (!first) {
      const auto distance = kendall_tau(previous, current);
      cumulative += distance;
      ++transitions;
      ++stats.histogram[distance];
    }
    first = false;
    previous.swap(current);
  });

  stats.cumulative = cumulative;
  stats.transitions = transitions;
  stats.average = transitions == 0 ? 0.0
                                   : static_cast<double>(cumulative) /
                                         static_cast<double>(transitions);
  return stats;
}

RankIndex recurrence_distance(std::size_t k) {
  if (k < 1) throw std::invalid_argument("recurrence_distance: k must be at least 1");
  RankIndex d = 0;
  for (std::size_t j = 2; j <= k; ++j) {
    const RankIndex kj = j;
    if (j % 2 == 0) {
      // (k-3) is -1 at k = 2; cpp_int is signed.
      d = kj * d + 1 + (kj - 3) * (kj - 1) + 1;
    } else {
      d = kj * d + (kj - 1);
    }
  }
  return d;
}

double recurrence_average(std::size_t k) {
  if (k < 2) return 0.0;
  const RankIndex transitions = factorial(k) - 1;
  return recurrence_distance(k).convert_to<double>() / transitions.convert_to<double>();
}

double average_distance_limit() { return 7.0 * std::cosh(1.0) - 4.0 * std::sinh(1.0) - 5.0; }

double adjacent_swap_fraction(std::size_t k, std::size_t guard) {
  const auto stats = measure_traversal(k, guard);
  if (stats.transitions == 0) return 0.0;
  return static_cast<double>(stats.adjacent_swaps()) / stats.transitions.convert_to<double>();
}

}  // namespace llperm
