#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace llperm {

struct BenchResult {
  std::string strategy;
  std::uint64_t permutations = 0;
  std::uint64_t checksum = 0;  // order-independent, equal across strategies
  double seconds = 0.0;

  double per_second() const { return seconds > 0 ? static_cast<double>(permutations) / seconds : 0.0; }
};

inline constexpr std::size_t kBenchMaxLength = 13;

/// Hash of one arrangement, mixed so that summing over a traversal gives an
/// order-independent checksum.
std::uint64_t arrangement_hash(std::uint64_t polynomial);

/// Times a full traversal of the identity of length k with each strategy.
/// Every visitor reads the whole arrangement and folds it into a checksum.
std::vector<BenchResult> run_bench(std::size_t k, bool baselines = true);

}  // namespace llperm
