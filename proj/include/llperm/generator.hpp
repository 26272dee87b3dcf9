#pragma once

// Permutation generation by in-place pick-and-insert on a singly linked list.
//
// For a sublist of length k starting at index i the schedule is: a no-op
// recursive call, then k-1 moves each followed by a recursive call. A move
// inserts at i either the element at i+1 (left) or the last element of the
// whole list (right). The first and last moves are left; the ones in between
// are right when k is even and left when k is odd. Consecutive permutations
// differ by exactly one such move.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "llperm/seq.hpp"

namespace llperm {

enum class MoveSource : std::uint8_t { NoOp, Left, Right };

const char* to_string(MoveSource source);

struct MoveRecord {
  std::size_t index = 0;    // sublist start, where the element is inserted
  MoveSource source = MoveSource::NoOp;
  std::size_t sublist = 0;  // sublist length at this move

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// Source of slot `slot` (0-based) in the schedule of a sublist of length `sublist`.
constexpr MoveSource schedule_source(std::size_t sublist, std::size_t slot) {
  if (slot == 0) return MoveSource::NoOp;
  if (slot == 1 || slot + 1 == sublist) return MoveSource::Left;
  return sublist % 2 == 0 ? MoveSource::Right : MoveSource::Left;
}

namespace detail {

template <class T>
void swap_with_next(NodeHandle<T> node) {
  using std::swap;
  swap(node.value(), node.next().value());
}

// Visits every permutation of the sublist after `prev` (length >= 2, running
// to the end of the list) and returns the penultimate node of the list.
template <class T, class Visitor>
NodeHandle<T> visit_sublist(SinglyLinkedSeq<T>& seq, NodeHandle<T> prev, std::size_t length,
                            const PermutationView<T>& view, Visitor& visit) {
  if (length == 2) {
    visit(view);
    swap_with_next(prev.next());
    visit(view);
    return prev.next();
  }

  NodeHandle<T> penultimate = visit_sublist(seq, prev.next(), length - 1, view, visit);
  for (std::size_t slot = 1; slot < length; ++slot) {
    if (schedule_source(length, slot) == MoveSource::Right) {
      seq.insert_after(prev, seq.extract_after(penultimate));
    } else {
      swap_with_next(prev.next());
    }
    penultimate = visit_sublist(seq, prev.next(), length - 1, view, visit);
  }
  return penultimate;
}

}  // namespace detail

/// Calls `visit(PermutationView<T>)` once per permutation of `seq`, max(1, n!)
/// times in total. The visitor must not modify the list. On return the list
/// holds the last permutation of the traversal.
template <class T, class Visitor>
void visit_permutations(SinglyLinkedSeq<T>& seq, Visitor&& visit) {
  const PermutationView<T> view(seq);
  if (seq.size() < 2) {
    visit(view);
    return;
  }
  detail::visit_sublist(seq, seq.sentinel(), seq.size(), view, visit);
}

/// Lazy depth-first linearization of the move schedule. Holds one slot
/// counter per recursion level, so memory is O(length).
class MoveCursor {
 public:
  explicit MoveCursor(std::size_t length);

  /// Next non-no-op move, or nullopt once all length! - 1 moves are out.
  std::optional<MoveRecord> next();

  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
  std::vector<std::size_t> slots_;  // slots_[d]: current slot of sublist length length_-d
};

/// Every move of a full traversal of a list of length `length`, no-ops excluded.
std::vector<MoveRecord> move_stream(std::size_t length);

/// Same as move_stream, with a NoOp record each time a sublist frame is entered.
std::vector<MoveRecord> schedule_stream(std::size_t length);

/// Applies one move using positional traversal. Left moves swap payloads,
/// right moves relink the tail node.
template <class T>
void apply_move(SinglyLinkedSeq<T>& seq, const MoveRecord& move) {
  const std::size_t n = seq.size();
  switch (move.source) {
    case MoveSource::NoOp:
      return;
    case MoveSource::Left:
      if (move.index + 1 >= n) {
        throw std::out_of_range("apply_move: left move at " + std::to_string(move.index) +
                                " needs length > " + std::to_string(move.index + 1));
      }
      detail::swap_with_next(seq.node_at(move.index));
      return;
    case MoveSource::Right:
      if (move.index + 1 >= n) {
        throw std::out_of_range("apply_move: right move at " + std::to_string(move.index) +
                                " needs length > " + std::to_string(move.index + 1));
      }
      seq.relocate(n - 1, move.index);
      return;
  }
}

/// External iteration over the permutations of a list, in the same order as
/// visit_permutations. Each step applies one move through cached per-level
/// predecessor handles.
template <class T>
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PermutationView<T>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    PermutationView<T> operator*() const { return PermutationView<T>(*owner_->seq_); }
    iterator& operator++() {
      owner_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.at_end(); }

   private:
    friend class PermutationRange;
    bool at_end() const { return owner_->done_; }
    explicit iterator(PermutationRange* owner) : owner_(owner) {}
    PermutationRange* owner_ = nullptr;
  };

  explicit PermutationRange(SinglyLinkedSeq<T>& seq)
      : seq_(&seq), cursor_(seq.size()), prev_(seq.size() < 2 ? 0 : seq.size() - 1) {
    refresh_from(0, seq.sentinel());
  }

  // Single pass: begin() does not rewind.
  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

  /// Last move applied, empty before the first advance.
  const std::optional<MoveRecord>& last_move() const { return last_; }

 private:
  void advance() {
    last_ = cursor_.next();
    if (!last_) {
      done_ = true;
      return;
    }
    const std::size_t level = last_->index;
    NodeHandle<T> prev = prev_[level];
    if (last_->source == MoveSource::Right) {
      NodeHandle<T> penultimate = prev;
      while (penultimate.next().next()) penultimate = penultimate.next();
      seq_->insert_after(prev, seq_->extract_after(penultimate));
    } else {
      detail::swap_with_next(prev.next());
    }
    refresh_from(level + 1, prev.next());
  }

  // Moves at level d only touch positions >= d, so prev_[0..d] stay valid.
  void refresh_from(std::size_t level, NodeHandle<T> node) {
    for (; level < prev_.size(); ++level) {
      prev_[level] = node;
      node = node.next();
    }
  }

  SinglyLinkedSeq<T>* seq_;
  MoveCursor cursor_;
  std::vector<NodeHandle<T>> prev_;  // prev_[d]: node before position d
  std::optional<MoveRecord> last_;
  bool done_ = false;
};

template <class T>
PermutationRange<T> permutations(SinglyLinkedSeq<T>& seq) {
  return PermutationRange<T>(seq);
}

}  // namespace llperm
