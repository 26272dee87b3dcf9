#pragma once

// Sentinel-headed singly linked list whose nodes live in a per-list arena.
//
// Nodes are never destroyed while the list is alive: extract/insert only
// relink them, so a permutation traversal rearranges the original nodes and
// allocation_count() stays fixed. Detached nodes are marked by a self-loop,
// which is how insert_after() tells them apart from the tail node.

#include <cstddef>
#include <deque>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <ranges>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace llperm {

/// Thrown when a list primitive is used outside its contract.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class T>
class SinglyLinkedSeq;

namespace detail {

struct NodeBase {
  NodeBase* next = nullptr;
};

template <class T>
struct Node : NodeBase {
  template <class... Args>
  explicit Node(Args&&... args) : value(std::forward<Args>(args)...) {}
  T value;
};

}  // namespace detail

/// Opaque reference to one node of a SinglyLinkedSeq (or its sentinel).
template <class T>
class NodeHandle {
 public:
  NodeHandle() = default;

  explicit operator bool() const { return node_ != nullptr; }
  friend bool operator==(NodeHandle, NodeHandle) = default;

  // Successor in list order; empty handle at the tail.
  NodeHandle next() const { return NodeHandle(node_->next); }

  // Must not be called on the sentinel.
  T& value() const { return static_cast<detail::Node<T>*>(node_)->value; }

  bool detached() const { return node_->next == node_; }

 private:
  friend class SinglyLinkedSeq<T>;
  explicit NodeHandle(detail::NodeBase* node) : node_(node) {}

  detail::NodeBase* node_ = nullptr;
};

template <class T>
class SinglyLinkedSeq {
  using Node = detail::Node<T>;

 public:
  using value_type = T;
  using handle = NodeHandle<T>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    const_iterator() = default;
    reference operator*() const { return static_cast<const Node*>(node_)->value; }
    pointer operator->() const { return &**this; }
    const_iterator& operator++() {
      node_ = node_->next;
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const_iterator, const_iterator) = default;

   private:
    friend class SinglyLinkedSeq;
    explicit const_iterator(const detail::NodeBase* node) : node_(node) {}
    const detail::NodeBase* node_ = nullptr;
  };

  SinglyLinkedSeq() : impl_(std::make_unique<Impl>()) {}

  SinglyLinkedSeq(std::initializer_list<T> items) : SinglyLinkedSeq() {
    append_all(items);
  }

  template <std::ranges::input_range R>
    requires std::convertible_to<std::ranges::range_reference_t<R>, T>
  static SinglyLinkedSeq from_elements(R&& items) {
    SinglyLinkedSeq seq;
    seq.append_all(std::forward<R>(items));
    return seq;
  }

  // Copies build fresh nodes; the copy's allocation_count starts over.
  SinglyLinkedSeq(const SinglyLinkedSeq& other) : SinglyLinkedSeq() { append_all(other); }
  SinglyLinkedSeq& operator=(const SinglyLinkedSeq& other) {
    if (this != &other) *this = SinglyLinkedSeq(other);
    return *this;
  }
  // Moves keep node addresses, so handles survive.
  SinglyLinkedSeq(SinglyLinkedSeq&&) noexcept = default;
  SinglyLinkedSeq& operator=(SinglyLinkedSeq&&) noexcept = default;
  ~SinglyLinkedSeq() = default;

  std::size_t size() const { return impl_->length; }
  bool empty() const { return impl_->length == 0; }

  /// Node constructions attributed to this list, sentinel included.
  std::size_t allocation_count() const { return impl_->arena.size() + 1; }

  handle sentinel() const { return handle(&impl_->sentinel); }
  handle front() const { return handle(impl_->sentinel.next); }

  const_iterator begin() const { return const_iterator(impl_->sentinel.next); }
  const_iterator end() const { return const_iterator(nullptr); }

  /// Detaches and returns the successor of `pos`. O(1).
  handle extract_after(handle pos) {
    if (!pos || pos.detached() || pos.node_->next == nullptr) {
      throw ContractViolation("extract_after: position has no successor");
    }
    detail::NodeBase* victim = pos.node_->next;
    pos.node_->next = victim->next;
    victim->next = victim;
    --impl_->length;
    return handle(victim);
  }

  /// Links the detached node `node` right after `pos`. O(1).
  void insert_after(handle pos, handle node) {
    if (!node || !node.detached()) {
      throw ContractViolation("insert_after: node is not detached");
    }
    if (!pos || pos.detached()) {
      throw ContractViolation("insert_after: position is not linked");
    }
    node.node_->next = pos.node_->next;
    pos.node_->next = node.node_;
    ++impl_->length;
  }

  /// Node at position index-1, the sentinel for index 0. O(index).
  handle node_before(std::size_t index) const {
    if (index > impl_->length) throw std::out_of_range(range_message("node_before", index));
    detail::NodeBase* node = &impl_->sentinel;
    for (std::size_t i = 0; i < index; ++i) node = node->next;
    return handle(node);
  }

  handle node_at(std::size_t index) const {
    if (index >= impl_->length) throw std::out_of_range(range_message("node_at", index));
    return node_before(index).next();
  }

  const T& at(std::size_t index) const { return node_at(index).value(); }

  /// Removes the element at `index` and returns it. The node stays in the
  /// arena, so allocation_count() is unchanged.
  T extract_at(std::size_t index) {
    if (index >= impl_->length) throw std::out_of_range(range_message("extract_at", index));
    return std::move(extract_after(node_before(index)).value());
  }

  /// Inserts a new element so that it ends up at `index`. Allocates a node.
  void insert_at(std::size_t index, T value) {
    if (index > impl_->length) throw std::out_of_range(range_message("insert_at", index));
    insert_after(node_before(index), make_node(std::move(value)));
  }

  /// Pick-and-insert without allocation: Insert(L, to, extract(L, from)).
  void relocate(std::size_t from, std::size_t to) {
    if (from >= impl_->length || to >= impl_->length) {
      throw std::out_of_range(range_message("relocate", from > to ? from : to));
    }
    handle node = extract_after(node_before(from));
    insert_after(node_before(to), node);
  }

  std::vector<T> to_vector() const { return std::vector<T>(begin(), end()); }

  /// Counts nodes reachable from the sentinel, stopping after size()+1 so a
  /// cycle cannot hang the caller.
  std::size_t reachable_count() const {
    std::size_t count = 0;
    for (auto* node = impl_->sentinel.next; node != nullptr && count <= impl_->length;
         node = node->next) {
      ++count;
    }
    return count;
  }

 private:
  struct Impl {
    detail::NodeBase sentinel;
    std::deque<Node> arena;
    std::size_t length = 0;
  };

  handle make_node(T value) {
    Node& node = impl_->arena.emplace_back(std::move(value));
    node.next = &node;
    return handle(&node);
  }

  template <class R>
  void append_all(R&& items) {
    detail::NodeBase* tail = &impl_->sentinel;
    while (tail->next != nullptr) tail = tail->next;
    for (auto&& item : items) {
      Node& node = impl_->arena.emplace_back(static_cast<T>(item));
      tail->next = &node;
      tail = &node;
      ++impl_->length;
    }
  }

  std::string range_message(const char* op, std::size_t index) const {
    return std::string(op) + ": index " + std::to_string(index) + " out of range for length " +
           std::to_string(impl_->length);
  }

  std::unique_ptr<Impl> impl_;
};

/// Read-only view of a list in its current order.
template <class T>
class PermutationView {
 public:
  explicit PermutationView(const SinglyLinkedSeq<T>& seq) : seq_(&seq) {}

  auto begin() const { return seq_->begin(); }
  auto end() const { return seq_->end(); }
  std::size_t size() const { return seq_->size(); }
  std::vector<T> to_vector() const { return seq_->to_vector(); }

 private:
  const SinglyLinkedSeq<T>* seq_;
};

}  // namespace llperm
