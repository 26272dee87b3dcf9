#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "llperm/seq.hpp"

using llperm::ContractViolation;
using llperm::SinglyLinkedSeq;
using Seq = SinglyLinkedSeq<int>;

TEST_CASE("from_elements builds the list in order with one node per element plus sentinel") {
  Seq empty;
  CHECK(empty.size() == 0);
  CHECK(empty.empty());
  CHECK(empty.to_vector().empty());
  CHECK(empty.allocation_count() == 1);

  auto single = Seq::from_elements(std::vector<int>{0});
  CHECK(single.to_vector() == std::vector<int>{0});
  CHECK(single.size() == 1);

  Seq four{0, 1, 2, 3};
  CHECK(four.to_vector() == std::vector<int>{0, 1, 2, 3});
  CHECK(four.size() == 4);
  CHECK(four.allocation_count() == 5);
  CHECK(four.reachable_count() == 4);
}

TEST_CASE("extract_after detaches the successor") {
  SUBCASE("head") {
    Seq seq{0, 1, 2, 3};
    auto node = seq.extract_after(seq.sentinel());
    CHECK(node.value() == 0);
    CHECK(node.detached());
    CHECK(seq.to_vector() == std::vector<int>{1, 2, 3});
    CHECK(seq.size() == 3);
  }
  SUBCASE("middle") {
    Seq seq{0, 1, 2, 3};
    auto node = seq.extract_after(seq.node_at(0));
    CHECK(node.value() == 1);
    CHECK(seq.to_vector() == std::vector<int>{0, 2, 3});
  }
  SUBCASE("tail") {
    Seq seq{0, 1, 2, 3};
    auto node = seq.extract_after(seq.node_at(2));
    CHECK(node.value() == 3);
    CHECK(seq.to_vector() == std::vector<int>{0, 1, 2});
    CHECK(seq.allocation_count() == 5);
  }
  SUBCASE("no successor") {
    Seq seq{0, 1};
    CHECK_THROWS_AS(seq.extract_after(seq.node_at(1)), ContractViolation);
    Seq empty;
    CHECK_THROWS_AS(empty.extract_after(empty.sentinel()), ContractViolation);
  }
}

TEST_CASE("insert_after undoes extract_after at the same handle") {
  for (std::size_t pos = 0; pos < 4; ++pos) {
    Seq seq{0, 1, 2, 3};
    auto prev = seq.node_before(pos);
    auto node = seq.extract_after(prev);
    seq.insert_after(prev, node);
    CHECK(seq.to_vector() == std::vector<int>{0, 1, 2, 3});
    CHECK(seq.size() == 4);
    CHECK(seq.reachable_count() == 4);
  }
}

TEST_CASE("insert_after rejects nodes that are still linked") {
  Seq seq{0, 1, 2, 3};
  CHECK_THROWS_AS(seq.insert_after(seq.sentinel(), seq.node_at(3)), ContractViolation);
  CHECK_THROWS_AS(seq.insert_after(seq.sentinel(), seq.node_at(1)), ContractViolation);
  CHECK(seq.to_vector() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("positional extract and insert") {
  Seq seq{0, 1, 2, 3};
  CHECK(seq.extract_at(1) == 1);
  CHECK(seq.to_vector() == std::vector<int>{0, 2, 3});

  // pick-and-insert: Insert(L, 0, extract(L, 1))
  const int picked = seq.extract_at(1);
  seq.insert_at(0, picked);
  CHECK(seq.to_vector() == std::vector<int>{2, 0, 3});

  Seq tail{0, 1, 2, 3};
  CHECK(tail.extract_at(3) == 3);
  CHECK(tail.to_vector() == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS(tail.extract_at(3), std::out_of_range);
  CHECK_THROWS_AS(tail.insert_at(4, 9), std::out_of_range);
  tail.insert_at(3, 9);
  CHECK(tail.to_vector() == std::vector<int>{0, 1, 2, 9});
}

TEST_CASE("relocate moves one node without allocating") {
  Seq seq{0, 1, 2, 3};
  seq.relocate(3, 0);
  CHECK(seq.to_vector() == std::vector<int>{3, 0, 1, 2});
  seq.relocate(1, 0);
  CHECK(seq.to_vector() == std::vector<int>{0, 3, 1, 2});
  CHECK(seq.allocation_count() == 5);
  CHECK_THROWS_AS(seq.relocate(4, 0), std::out_of_range);
}

TEST_CASE("to_vector and allocation_count are observers") {
  Seq seq{2, 0, 1};
  const auto before = seq.allocation_count();
  CHECK(seq.to_vector() == std::vector<int>{2, 0, 1});
  CHECK(seq.allocation_count() == before);
}

TEST_CASE("moving a list keeps handles valid") {
  Seq seq{0, 1, 2};
  auto handle = seq.node_at(1);
  Seq moved = std::move(seq);
  CHECK(moved.node_at(1) == handle);
  moved.insert_after(moved.sentinel(), moved.extract_after(handle));
  CHECK(moved.to_vector() == std::vector<int>{2, 0, 1});
}

TEST_CASE("copies rebuild their own nodes") {
  Seq seq{0, 1, 2};
  seq.relocate(2, 0);
  Seq copy = seq;
  CHECK(copy.to_vector() == seq.to_vector());
  CHECK(copy.allocation_count() == 4);
  CHECK(copy.front() != seq.front());
}

TEST_CASE("random extract/insert pairs preserve the multiset and the structure") {
  std::mt19937 rng(20250101);
  for (std::size_t k = 1; k <= 8; ++k) {
    std::vector<std::string> items;
    for (std::size_t i = 0; i < k; ++i) items.push_back("e" + std::to_string(i % 3));
    auto seq = SinglyLinkedSeq<std::string>::from_elements(items);
    const auto allocations = seq.allocation_count();
    auto expected = items;
    std::sort(expected.begin(), expected.end());
    for (int step = 0; step < 200; ++step) {
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      const std::size_t from = pick(rng);
      auto node = seq.extract_after(seq.node_before(from));
      std::uniform_int_distribution<std::size_t> place(0, k - 1);
      seq.insert_after(seq.node_before(place(rng)), node);

      auto current = seq.to_vector();
      std::sort(current.begin(), current.end());
      REQUIRE(current == expected);
      REQUIRE(seq.size() == k);
      REQUIRE(seq.reachable_count() == k);
    }
    CHECK(seq.allocation_count() == allocations);
  }
}
