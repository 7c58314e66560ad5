// Copyright 2026 The Stallings Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STALLINGS_LINKED_LIST_H_
#define STALLINGS_LINKED_LIST_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

namespace stallings {

// A family of doubly linked lists over a shared pool of node slots.
//
// Nodes and lists are identified by dense integer ids, so an element that
// must live in several lists at once (a graph edge sits in the edge lists of
// both its endpoints) simply owns several slot ids. Every mutating operation
// touches a bounded number of fields; `writes()` counts those field writes so
// the bound can be checked directly.
//
// Only the head and tail of a list record their owning list. Middle nodes
// have no owner, which is why Remove() dispatches on prev/next definedness.
class IntrusiveLists {
 public:
  using NodeId = std::uint32_t;
  using ListId = std::uint32_t;
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

  struct NodeSlot {
    NodeId next = kNil;
    NodeId prev = kNil;
    ListId owner = kNil;
  };

  struct ListCore {
    NodeId head = kNil;
    NodeId tail = kNil;
  };

  IntrusiveLists() = default;
  IntrusiveLists(std::size_t nodes, std::size_t lists)
      : slots_(nodes), lists_(lists) {}

  NodeId AddNodeSlot();
  ListId AddList();
  void Reserve(std::size_t nodes, std::size_t lists);

  // Appends a detached node at the tail of `list`. Throws std::logic_error if
  // the node already belongs to a list.
  void AddNode(NodeId node, ListId list);

  // Detaches `node` from whatever list holds it. No-op on a detached node.
  void Remove(NodeId node);

  // Moves every node of `from` to the end of `into`, leaving `from` empty.
  // Throws std::invalid_argument when both ids name the same list.
  void Concatenate(ListId into, ListId from);

  bool IsDetached(NodeId node) const {
    const NodeSlot& s = slots_[node];
    return s.next == kNil && s.prev == kNil && s.owner == kNil;
  }
  bool Empty(ListId list) const { return lists_[list].head == kNil; }

  const NodeSlot& slot(NodeId node) const { return slots_[node]; }
  const ListCore& list(ListId list) const { return lists_[list]; }
  std::size_t node_count() const { return slots_.size(); }
  std::size_t list_count() const { return lists_.size(); }

  // Cumulative number of slot and list-core field writes.
  std::uint64_t writes() const { return writes_; }

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    Iterator() = default;
    Iterator(const IntrusiveLists* owner, NodeId node) : owner_(owner), node_(node) {}
    NodeId operator*() const { return node_; }
    Iterator& operator++() {
      node_ = owner_->slots_[node_].next;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.node_ == b.node_;
    }

   private:
    const IntrusiveLists* owner_ = nullptr;
    NodeId node_ = kNil;
  };

  class Range {
   public:
    Range(const IntrusiveLists* owner, NodeId head) : owner_(owner), head_(head) {}
    Iterator begin() const { return {owner_, head_}; }
    Iterator end() const { return {owner_, kNil}; }

   private:
    const IntrusiveLists* owner_;
    NodeId head_;
  };

  // Head-to-tail traversal by repeated `next`.
  Range Nodes(ListId list) const { return {this, lists_[list].head}; }

  // Full-traversal check of the well-formedness conditions for one list.
  // Returns an empty string when well formed, otherwise a description.
  std::string CheckWellFormed(ListId list) const;

 private:
  void SetNext(NodeId n, NodeId v) {
    slots_[n].next = v;
    ++writes_;
  }
  void SetPrev(NodeId n, NodeId v) {
    slots_[n].prev = v;
    ++writes_;
  }
  void SetOwner(NodeId n, ListId v) {
    slots_[n].owner = v;
    ++writes_;
  }
  void SetHead(ListId l, NodeId v) {
    lists_[l].head = v;
    ++writes_;
  }
  void SetTail(ListId l, NodeId v) {
    lists_[l].tail = v;
    ++writes_;
  }

  std::vector<NodeSlot> slots_;
  std::vector<ListCore> lists_;
  std::uint64_t writes_ = 0;
};

}  // namespace stallings

#endif  // STALLINGS_LINKED_LIST_H_
