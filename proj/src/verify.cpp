#include "llperm/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "llperm/generator.hpp"
#include "llperm/metrics.hpp"
#include "llperm/oracle.hpp"
#include "llperm/ranking.hpp"

namespace llperm {

std::vector<Snapshot> generator_snapshots(std::size_t k) {
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(k));
  std::vector<Snapshot> snapshots;
  visit_permutations(seq, [&](const PermutationView<std::size_t>& view) {
    snapshots.push_back(view.to_vector());
  });
  return snapshots;
}

std::optional<std::size_t> relocation_span(std::span<const std::size_t> before,
                                           std::span<const std::size_t> after) {
  if (before.size() != after.size()) return std::nullopt;
  std::size_t first = 0;
  while (first < before.size() && before[first] == after[first]) ++first;
  if (first == before.size()) return std::nullopt;
  std::size_t last = before.size() - 1;
  while (before[last] == after[last]) --last;

  // Element moved right: before[first] lands at `last`.
  const bool moved_right =
      before[first] == after[last] &&
      std::equal(before.begin() + first + 1, before.begin() + last + 1, after.begin() + first);
  // Element moved left: before[last] lands at `first`.
  const bool moved_left =
      before[last] == after[first] &&
      std::equal(before.begin() + first, before.begin() + last, after.begin() + first + 1);
  if (!moved_right && !moved_left) return std::nullopt;
  return last - first;
}

std::string LengthReport::summary() const {
  std::string line = "k=" + std::to_string(k) + ": " + std::to_string(distinct) + "/" +
                     std::to_string(expected) + " permutations, " + std::to_string(transitions) +
                     " transitions, " + (all_single_move ? "all single-move" : "NOT single-move");
  if (!ok()) line += ", FAILED";
  return line;
}

bool VerifyReport::ok() const {
  return std::all_of(lengths.begin(), lengths.end(), [](const auto& r) { return r.ok(); });
}

namespace {

std::string describe(const Snapshot& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

LengthReport verify_length(std::size_t k, const SnapshotGenerator& generator) {
  LengthReport report;
  report.k = k;
  report.expected = factorial(k).convert_to<std::uint64_t>();
  auto fail = [&](std::string message) {
    report.failures.push_back("k=" + std::to_string(k) + ": " + std::move(message));
  };

  const auto identity = identity_permutation(k);
  const auto snapshots = generator(k);
  const auto trace = oracle::oracle_permutations(identity);

  // Completeness.
  oracle::OracleTrace<std::size_t> wrapped{snapshots, {}};
  const auto completeness = oracle::verify_complete(wrapped, std::span<const std::size_t>(identity));
  {
    auto sorted = snapshots;
    std::sort(sorted.begin(), sorted.end());
    report.distinct = static_cast<std::uint64_t>(
        std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  if (!completeness.complete) fail("completeness: " + completeness.diagnostics);

  // Oracle order.
  const auto mismatch = std::mismatch(snapshots.begin(), snapshots.end(),
                                      trace.snapshots.begin(), trace.snapshots.end());
  if (mismatch.first != snapshots.end() || mismatch.second != trace.snapshots.end()) {
    const auto at = static_cast<std::size_t>(mismatch.first - snapshots.begin());
    fail("order diverges from oracle at index " + std::to_string(at) +
         (mismatch.first != snapshots.end() && mismatch.second != trace.snapshots.end()
              ? ": got " + describe(*mismatch.first) + ", oracle " + describe(*mismatch.second)
              : ": length differs"));
  }

  // Single relocation per transition, Kendall tau equal to its span.
  report.all_single_move = true;
  for (std::size_t t = 1; t < snapshots.size(); ++t) {
    ++report.transitions;
    const auto span = relocation_span(snapshots[t - 1], snapshots[t]);
    if (!span) {
      report.all_single_move = false;
      fail("transition " + std::to_string(t) + " " + describe(snapshots[t - 1]) + " -> " +
           describe(snapshots[t]) + " is not a single relocation");
      break;
    }
    if (kendall_tau(snapshots[t - 1], snapshots[t]) != *span) {
      fail("transition " + std::to_string(t) + ": Kendall tau differs from relocation span");
      break;
    }
  }

  // Final state and in-place traversal on a fresh list.
  {
    auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    const auto allocations = seq.allocation_count();
    std::uint64_t visits = 0;
    visit_permutations(seq, [&](const auto&) { ++visits; });
    if (seq.allocation_count() != allocations) fail("traversal allocated nodes");
    auto expected_last = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    last_perm(expected_last, 0);
    if (seq.to_vector() != expected_last.to_vector()) {
      fail("final state " + describe(seq.to_vector()) + " differs from last_perm pattern " +
           describe(expected_last.to_vector()));
    }
    if (seq.reachable_count() != seq.size()) fail("list structure corrupted");
  }

  // Replay of the move stream, and the external iterator.
  {
    auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    const auto moves = move_stream(k);
    if (moves.size() + 1 != snapshots.size()) {
      fail("move stream has " + std::to_string(moves.size()) + " moves");
    } else {
      for (std::size_t t = 0; t < moves.size(); ++t) {
        apply_move(seq, moves[t]);
        if (seq.to_vector() != snapshots[t + 1]) {
          fail("move stream replay diverges at move " + std::to_string(t));
          break;
        }
      }
    }
    auto iter_seq = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    std::size_t idx = 0;
    for (const auto& view : permutations(iter_seq)) {
      if (idx >= snapshots.size() || view.to_vector() != snapshots[idx]) {
        fail("iterator diverges at index " + std::to_string(idx));
        break;
      }
      ++idx;
    }
  }

  // Ranking agrees with position in the traversal.
  report.ranking_exhaustive = k <= kExhaustiveRankingLength;
  const std::size_t stride = report.ranking_exhaustive ? 1 : 997;
  for (std::size_t n = 0; n < snapshots.size(); n += stride) {
    auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    quick_perm(seq, n);
    if (seq.to_vector() != snapshots[n]) {
      fail("quick_perm(" + std::to_string(n) + ") = " + describe(seq.to_vector()) +
           ", traversal has " + describe(snapshots[n]));
      break;
    }
    if (is_canonical_permutation(snapshots[n]) && quick_index(snapshots[n]) != n) {
      fail("quick_index" + describe(snapshots[n]) + " != " + std::to_string(n));
      break;
    }
  }
  return report;
}

}  // namespace

VerifyReport verify_up_to(std::size_t max_k, const SnapshotGenerator& generator) {
  if (max_k > kVerifyMaxLength) {
    throw std::invalid_argument("verify: max k is " + std::to_string(kVerifyMaxLength));
  }
  VerifyReport report;
  for (std::size_t k = 0; k <= max_k; ++k) report.lengths.push_back(verify_length(k, generator));
  return report;
}

}  // namespace llperm
