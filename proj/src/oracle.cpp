#include "llperm/oracle.hpp"

namespace llperm::oracle {

RankIndex brute_force_index(std::span<const std::size_t> target) {
  if (target.size() > kMaxLength) {
    throw std::invalid_argument("brute_force_index: length exceeds " + std::to_string(kMaxLength));
  }
  const auto trace = oracle_permutations(identity_permutation(target.size()));
  for (std::size_t idx = 0; idx < trace.snapshots.size(); ++idx) {
    if (std::equal(trace.snapshots[idx].begin(), trace.snapshots[idx].end(), target.begin(),
                   target.end())) {
      return idx;
    }
  }
  throw std::invalid_argument("brute_force_index: target not found in traversal");
}

}  // namespace llperm::oracle
