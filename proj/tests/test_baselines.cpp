#include <doctest.h>

#include <set>
#include <vector>

#include "llperm/baselines.hpp"
#include "llperm/bench.hpp"
#include "llperm/ranking.hpp"

using namespace llperm;

TEST_CASE("baselines visit every permutation once") {
  for (std::size_t k = 0; k <= 7; ++k) {
    std::set<std::vector<std::size_t>> heap_seen;
    std::size_t heap_visits = 0;
    auto values = identity_permutation(k);
    baseline::heap_permutations(values, [&](std::span<const std::size_t> v) {
      heap_seen.emplace(v.begin(), v.end());
      ++heap_visits;
    });
    CHECK(heap_visits == factorial(k));
    CHECK(heap_seen.size() == heap_visits);

    std::vector<std::vector<std::size_t>> lex;
    values = identity_permutation(k);
    baseline::lexicographic_permutations(
        values, [&](std::span<const std::size_t> v) { lex.emplace_back(v.begin(), v.end()); });
    CHECK(lex.size() == factorial(k));
    CHECK(std::is_sorted(lex.begin(), lex.end()));
  }
}

TEST_CASE("bench strategies agree on count and checksum") {
  const auto results = run_bench(6);
  REQUIRE(results.size() == 4);
  for (const auto& r : results) {
    CHECK(r.permutations == 720);
    CHECK(r.checksum == results.front().checksum);
  }
  const auto again = run_bench(6);
  CHECK(again.front().checksum == results.front().checksum);
  CHECK(run_bench(2).front().permutations == 2);
  CHECK_THROWS_AS(run_bench(14), std::invalid_argument);
}
