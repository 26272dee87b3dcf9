// Counts global heap allocations around a traversal. Lives in its own binary
// because it replaces operator new.

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <new>

#include "llperm/generator.hpp"
#include "llperm/ranking.hpp"

namespace {
std::atomic<std::size_t> g_allocations{0};
}

void* operator new(std::size_t size) {
  ++g_allocations;
  if (void* p = std::malloc(size ? size : 1)) return p;
  throw std::bad_alloc();
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }

using namespace llperm;

TEST_CASE("recursive traversal performs no heap allocation") {
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(9));
  std::size_t visits = 0;
  std::size_t checksum = 0;
  const std::size_t before = g_allocations.load();
  visit_permutations(seq, [&](const PermutationView<std::size_t>& view) {
    ++visits;
    checksum += *view.begin();
  });
  CHECK(g_allocations.load() == before);
  CHECK(visits == 362880);
  CHECK(checksum > 0);
}

TEST_CASE("iterator steps perform no heap allocation") {
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(8));
  auto range = permutations(seq);
  auto it = range.begin();
  const std::size_t before = g_allocations.load();
  std::size_t visits = 0;
  for (; it != range.end(); ++it) ++visits;
  CHECK(g_allocations.load() == before);
  CHECK(visits == 40320);
}

TEST_CASE("last_perm performs no heap allocation") {
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(12));
  const std::size_t before = g_allocations.load();
  for (std::size_t start = 0; start <= 12; ++start) last_perm(seq, start);
  CHECK(g_allocations.load() == before);
}

TEST_CASE("allocation counter sees ordinary allocations") {
  const std::size_t before = g_allocations.load();
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(3));
  CHECK(g_allocations.load() > before);
  CHECK(seq.size() == 3);
}
