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

#include "stallings/linked_list.h"

#include <stdexcept>
#include <unordered_set>

namespace stallings {

IntrusiveLists::NodeId IntrusiveLists::AddNodeSlot() {
  slots_.emplace_back();
  return static_cast<NodeId>(slots_.size() - 1);
}

IntrusiveLists::ListId IntrusiveLists::AddList() {
  lists_.emplace_back();
  return static_cast<ListId>(lists_.size() - 1);
}

void IntrusiveLists::Reserve(std::size_t nodes, std::size_t lists) {
  slots_.reserve(nodes);
  lists_.reserve(lists);
}

void IntrusiveLists::AddNode(NodeId node, ListId list) {
  if (!IsDetached(node)) {
    throw std::logic_error("AddNode: node " + std::to_string(node) +
                           " is already in a list");
  }
  const NodeId tail = lists_[list].tail;
  if (tail == kNil) {
    SetHead(list, node);
    SetTail(list, node);
    SetOwner(node, list);
    return;
  }
  SetNext(tail, node);
  SetPrev(node, tail);
  // The old tail becomes a middle node unless it is also the head.
  if (lists_[list].head != tail) SetOwner(tail, kNil);
  SetTail(list, node);
  SetOwner(node, list);
}

void IntrusiveLists::Remove(NodeId node) {
  const NodeSlot s = slots_[node];
  if (s.prev == kNil && s.next == kNil) {
    if (s.owner == kNil) return;  // detached
    SetHead(s.owner, kNil);
    SetTail(s.owner, kNil);
    SetOwner(node, kNil);
    return;
  }
  if (s.prev == kNil) {
    // Head of a list with at least two nodes.
    SetHead(s.owner, s.next);
    SetOwner(s.next, s.owner);
    SetPrev(s.next, kNil);
    SetNext(node, kNil);
    SetOwner(node, kNil);
    return;
  }
  if (s.next == kNil) {
    SetTail(s.owner, s.prev);
    SetOwner(s.prev, s.owner);
    SetNext(s.prev, kNil);
    SetPrev(node, kNil);
    SetOwner(node, kNil);
    return;
  }
  SetNext(s.prev, s.next);
  SetPrev(s.next, s.prev);
  SetNext(node, kNil);
  SetPrev(node, kNil);
}

void IntrusiveLists::Concatenate(ListId into, ListId from) {
  if (into == from) {
    throw std::invalid_argument("Concatenate: a list cannot be appended to itself");
  }
  const ListCore a = lists_[into];
  const ListCore b = lists_[from];
  if (b.head == kNil) return;
  if (a.head == kNil) {
    SetHead(into, b.head);
    SetOwner(b.head, into);
    SetTail(into, b.tail);
    SetOwner(b.tail, into);
    SetHead(from, kNil);
    SetTail(from, kNil);
    return;
  }
  SetNext(a.tail, b.head);
  SetPrev(b.head, a.tail);
  SetTail(into, b.tail);
  SetOwner(b.tail, into);
  // The junction nodes lose their owner unless they are still an end.
  if (a.tail != a.head) SetOwner(a.tail, kNil);
  if (b.head != b.tail) SetOwner(b.head, kNil);
  SetHead(from, kNil);
  SetTail(from, kNil);
}

std::string IntrusiveLists::CheckWellFormed(ListId list) const {
  const ListCore& l = lists_[list];
  if ((l.head == kNil) != (l.tail == kNil)) return "head/tail definedness differs";
  if (l.head == kNil) return {};
  if (slots_[l.head].prev != kNil) return "prev(head) is defined";
  if (slots_[l.tail].next != kNil) return "next(tail) is defined";
  if (slots_[l.head].owner != list) return "owner(head) is not the list";
  if (slots_[l.tail].owner != list) return "owner(tail) is not the list";
  std::unordered_set<NodeId> seen;
  NodeId prev = kNil;
  NodeId n = l.head;
  while (n != kNil) {
    if (!seen.insert(n).second) return "cycle at node " + std::to_string(n);
    if (slots_[n].prev != prev) return "prev mismatch at node " + std::to_string(n);
    if (n != l.head && n != l.tail && slots_[n].owner != kNil) {
      return "middle node " + std::to_string(n) + " records an owner";
    }
    prev = n;
    n = slots_[n].next;
  }
  if (prev != l.tail) return "traversal from head does not end at tail";
  return {};
}

}  // namespace stallings
