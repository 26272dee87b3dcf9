#pragma once

// Exhaustive cross-checks of the generator against the oracle, the move
// stream and the ranking functions, one report per length.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace llperm {

using Snapshot = std::vector<std::size_t>;
using SnapshotGenerator = std::function<std::vector<Snapshot>(std::size_t k)>;

/// All snapshots of visit_permutations on the identity of length k.
std::vector<Snapshot> generator_snapshots(std::size_t k);

/// Span of the single relocation turning `before` into `after`: the distance
/// between the removal and insertion positions. nullopt when the two do not
/// differ by exactly one relocated element.
std::optional<std::size_t> relocation_span(std::span<const std::size_t> before,
                                           std::span<const std::size_t> after);

struct LengthReport {
  std::size_t k = 0;
  std::uint64_t expected = 0;  // k!
  std::uint64_t distinct = 0;  // distinct permutations visited
  std::uint64_t transitions = 0;
  bool all_single_move = false;
  bool ranking_exhaustive = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

struct VerifyReport {
  std::vector<LengthReport> lengths;
  bool ok() const;
};

inline constexpr std::size_t kVerifyMaxLength = 9;
inline constexpr std::size_t kExhaustiveRankingLength = 7;

/// Runs every check for k = 0..max_k. Ranking is checked on every index for
/// k <= kExhaustiveRankingLength and on a fixed stride of indices above.
VerifyReport verify_up_to(std::size_t max_k, const SnapshotGenerator& generator = generator_snapshots);

}  // namespace llperm
