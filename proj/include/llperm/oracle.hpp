#pragma once

// Reference implementation used as ground truth in tests and `verify`.
//
// A literal transcription of the positional recursive procedure on a
// std::vector, with copies everywhere. It shares no code with the linked
// list generator; only the move semantics are common.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "llperm/generator.hpp"
#include "llperm/ranking.hpp"

namespace llperm::oracle {

inline constexpr std::size_t kMaxLength = 9;

template <class T>
struct OracleTrace {
  std::vector<std::vector<T>> snapshots;
  std::vector<MoveRecord> moves;
};

namespace detail {

template <class T>
void insert_extracted(std::vector<T>& list, std::size_t at, std::size_t from) {
  T element = list[from];
  list.erase(list.begin() + static_cast<std::ptrdiff_t>(from));
  list.insert(list.begin() + static_cast<std::ptrdiff_t>(at), element);
}

template <class T>
void permutations(std::vector<T>& list, std::size_t i, OracleTrace<T>& trace) {
  const std::size_t n = list.size();
  if (i + 1 >= n) {
    trace.snapshots.push_back(list);
    return;
  }
  auto left = [&] {
    insert_extracted(list, i, i + 1);
    trace.moves.push_back({i, MoveSource::Left, n - i});
  };
  auto right = [&] {
    insert_extracted(list, i, n - 1);
    trace.moves.push_back({i, MoveSource::Right, n - i});
  };

  permutations(list, i + 1, trace);
  left();
  permutations(list, i + 1, trace);
  // Repeat (n-i-3) times; no iterations when n-i < 4.
  for (std::size_t r = 0; r + 3 < n - i; ++r) {
    if ((n - i) % 2 == 0) {
      right();
    } else {
      left();
    }
    permutations(list, i + 1, trace);
  }
  if (n - i > 2) {
    left();
    permutations(list, i + 1, trace);
  }
}

}  // namespace detail

template <class T>
OracleTrace<T> oracle_permutations(std::vector<T> items) {
  if (items.size() > kMaxLength) {
    throw std::invalid_argument("oracle_permutations: length " + std::to_string(items.size()) +
                                " exceeds " + std::to_string(kMaxLength));
  }
  OracleTrace<T> trace;
  detail::permutations(items, 0, trace);
  return trace;
}

struct CompletenessReport {
  bool complete = false;
  std::optional<std::size_t> duplicate_index;  // later of the two equal snapshots
  std::string diagnostics;
};

/// True iff the trace holds max(1, k!) pairwise distinct permutations of `items`.
template <class T>
CompletenessReport verify_complete(const OracleTrace<T>& trace, std::span<const T> items) {
  CompletenessReport report;
  const RankIndex expected = factorial(items.size());
  if (RankIndex(trace.snapshots.size()) != expected) {
    report.diagnostics = "expected " + expected.str() + " snapshots, got " +
                         std::to_string(trace.snapshots.size());
    return report;
  }
  std::vector<T> sorted_items(items.begin(), items.end());
  std::sort(sorted_items.begin(), sorted_items.end());
  std::map<std::vector<T>, std::size_t> seen;
  for (std::size_t idx = 0; idx < trace.snapshots.size(); ++idx) {
    const auto& snapshot = trace.snapshots[idx];
    auto sorted = snapshot;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != sorted_items) {
      report.diagnostics = "snapshot " + std::to_string(idx) + " is not a permutation of the input";
      return report;
    }
    auto [it, inserted] = seen.emplace(snapshot, idx);
    if (!inserted) {
      report.duplicate_index = idx;
      report.diagnostics = "snapshot " + std::to_string(idx) + " duplicates snapshot " +
                           std::to_string(it->second);
      return report;
    }
  }
  report.complete = true;
  return report;
}

/// Linear scan of the oracle traversal of the identity for `target`.
RankIndex brute_force_index(std::span<const std::size_t> target);

}  // namespace llperm::oracle
