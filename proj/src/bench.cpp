#include "llperm/bench.hpp"

#include <chrono>
#include <stdexcept>

#include "llperm/baselines.hpp"
#include "llperm/generator.hpp"
#include "llperm/ranking.hpp"

namespace llperm {

std::uint64_t arrangement_hash(std::uint64_t x) {
  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

namespace {

struct Fold {
  std::uint64_t count = 0;
  std::uint64_t checksum = 0;

  template <class Range>
  void operator()(const Range& arrangement) {
    std::uint64_t h = 0;
    for (std::size_t v : arrangement) h = h * 31 + v + 1;
    checksum += arrangement_hash(h);
    ++count;
  }
};

template <class Run>
BenchResult timed(std::string name, Run&& run) {
  Fold fold;
  const auto start = std::chrono::steady_clock::now();
  run(fold);
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(name), fold.count, fold.checksum,
          std::chrono::duration<double>(stop - start).count()};
}

}  // namespace

std::vector<BenchResult> run_bench(std::size_t k, bool baselines) {
  if (k > kBenchMaxLength) {
    throw std::invalid_argument("bench: k must be at most " + std::to_string(kBenchMaxLength));
  }
  const auto identity = identity_permutation(k);
  std::vector<BenchResult> results;

  results.push_back(timed("linked-list (recursive)", [&](Fold& fold) {
    auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    visit_permutations(seq, [&](const PermutationView<std::size_t>& view) { fold(view); });
  }));
  results.push_back(timed("linked-list (iterator)", [&](Fold& fold) {
    auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity);
    for (const auto& view : permutations(seq)) fold(view);
  }));
  if (baselines) {
    results.push_back(timed("heap (array)", [&](Fold& fold) {
      auto values = identity;
      baseline::heap_permutations(values, [&](std::span<const std::size_t> v) { fold(v); });
    }));
    results.push_back(timed("lexicographic (array)", [&](Fold& fold) {
      auto values = identity;
      baseline::lexicographic_permutations(values,
                                           [&](std::span<const std::size_t> v) { fold(v); });
    }));
  }
  return results;
}

}  // namespace llperm
