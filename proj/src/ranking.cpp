#include "llperm/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace llperm {

RankIndex factorial(std::size_t k) {
  RankIndex result = 1;
  for (std::size_t i = 2; i <= k; ++i) result *= i;
  return result;
}

std::vector<RankIndex> factorial_table(std::size_t k) {
  std::vector<RankIndex> table(k + 1);
  table[0] = 1;
  for (std::size_t i = 1; i <= k; ++i) table[i] = table[i - 1] * i;
  return table;
}

bool is_canonical_permutation(std::span<const std::size_t> values) {
  std::vector<bool> seen(values.size(), false);
  for (std::size_t v : values) {
    if (v >= values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::size_t> identity_permutation(std::size_t k) {
  std::vector<std::size_t> values(k);
  std::iota(values.begin(), values.end(), std::size_t{0});
  return values;
}

RankIndex quick_index(std::span<const std::size_t> target) {
  if (!is_canonical_permutation(target)) {
    throw std::invalid_argument("quick_index: target is not a permutation of 0..k-1");
  }
  const std::size_t k = target.size();
  const auto factorials = factorial_table(k);
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(k));

  RankIndex rank = 0;
  std::size_t p = k;
  for (std::size_t m = 0; m < k; ++m) {
    --p;
    for (std::size_t i = 0; seq.at(m) != target[m]; ++i) {
      last_perm(seq, m + 1);
      if (i == 0 || i + 1 == p || p % 2 == 0) {
        seq.relocate(m + 1, m);
      } else {
        seq.relocate(k - 1, m);
      }
      rank += factorials[p];
    }
  }
  return rank;
}

std::vector<RankIndex> reversal_indices(std::size_t max_k) {
  std::vector<RankIndex> indices;
  indices.reserve(max_k);
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto reversal = identity_permutation(k);
    std::reverse(reversal.begin(), reversal.end());
    indices.push_back(quick_index(reversal));
  }
  return indices;
}

}  // namespace llperm
