#pragma once

// Ranking and unranking in generation order.
//
// Unranking walks down the recursion levels; at each level it skips whole
// recursive calls by jumping the suffix to the state the skipped call would
// leave behind (last_perm) and then applying the move that starts the next
// call. Ranking runs the same walk until the target's element is in place.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "llperm/seq.hpp"

namespace llperm {

using RankIndex = boost::multiprecision::cpp_int;

RankIndex factorial(std::size_t k);

/// Factorials 0!..k!.
std::vector<RankIndex> factorial_table(std::size_t k);

/// Rewrites the suffix starting at `start` into the arrangement a full
/// traversal of that suffix ends on. With j = suffix length, the new suffix
/// takes the old positions
///   j <= 1:          unchanged
///   j == 4:          (1, 2, 3, 0)
///   j odd, or 2:     (1, 0, 2, 3, ..., j-1)
///   j even, >= 6:    (1, 4, 3, 5, 6, ..., j-1, 2, 0)
/// Only relinks nodes. O(j) after the O(start) walk.
template <class T>
void last_perm(SinglyLinkedSeq<T>& seq, std::size_t start) {
  if (start > seq.size()) {
    throw std::out_of_range("last_perm: start " + std::to_string(start) +
                            " out of range for length " + std::to_string(seq.size()));
  }
  const std::size_t j = seq.size() - start;
  if (j <= 1) return;
  const NodeHandle<T> prev = seq.node_before(start);

  if (j % 2 == 1 || j == 2) {
    seq.insert_after(prev, seq.extract_after(prev.next()));
    return;
  }

  // 0 1 2 ... j-1  ->  1 2 ... j-1 0
  NodeHandle<T> first = seq.extract_after(prev);
  NodeHandle<T> last = prev;
  while (last.next()) last = last.next();
  seq.insert_after(last, first);
  if (j == 4) return;

  // -> 1 3 4 ... j-1 2 0  ->  1 4 3 5 ... j-1 2 0
  seq.insert_after(last, seq.extract_after(prev.next()));
  seq.insert_after(prev.next(), seq.extract_after(prev.next().next()));
}

/// Replaces `seq` by the permutation at 0-based position `rank` of the
/// traversal that starts from the current arrangement.
template <class T>
void quick_perm(SinglyLinkedSeq<T>& seq, RankIndex rank) {
  const std::size_t k = seq.size();
  const auto factorials = factorial_table(k);
  if (rank < 0 || rank >= factorials[k]) {
    throw std::out_of_range("quick_perm: index " + rank.str() + " out of range for length " +
                            std::to_string(k));
  }
  std::size_t p = k;
  std::size_t m = 0;
  while (rank > 0) {
    --p;
    const auto steps = static_cast<std::size_t>(rank / factorials[p]);
    for (std::size_t i = 0; i < steps; ++i) {
      last_perm(seq, m + 1);
      if (i == 0 || i + 1 == p || p % 2 == 0) {
        seq.relocate(m + 1, m);
      } else {
        seq.relocate(k - 1, m);
      }
    }
    rank %= factorials[p];
    ++m;
  }
}

/// True iff `values` holds each of 0..size-1 exactly once.
bool is_canonical_permutation(std::span<const std::size_t> values);

/// Position of `target` (a permutation of 0..k-1) in the traversal of the
/// identity. Throws std::invalid_argument if `target` is not a permutation.
RankIndex quick_index(std::span<const std::size_t> target);

/// Ranks of the reversals (k-1, ..., 1, 0) for k = 1..max_k.
std::vector<RankIndex> reversal_indices(std::size_t max_k);

std::vector<std::size_t> identity_permutation(std::size_t k);

}  // namespace llperm
