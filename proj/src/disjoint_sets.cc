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

#include "stallings/disjoint_sets.h"

#include <stdexcept>

namespace stallings {

DisjointSetForest::Node DisjointSetForest::MakeNode() {
  const Node n = static_cast<Node>(nodes_.size());
  nodes_.push_back({n, 0});
  return n;
}

void DisjointSetForest::Reserve(std::size_t n) {
  nodes_.reserve(n);
}

void DisjointSetForest::ThrowUnknownNode(Node n) {
  throw std::out_of_range("disjoint-set node " + std::to_string(n) + " does not exist");
}

DisjointSetForest::Node DisjointSetForest::Find(Node n) {
  // Two passes: locate the root, then re-point the path at it.
  Node root = n;
  while (nodes_[root].parent != root) {
    root = nodes_[root].parent;
    ++traversals_;
  }
  while (n != root) {
    const Node next = nodes_[n].parent;
    nodes_[n].parent = root;
    n = next;
  }
  return root;
}

DisjointSetForest::Node DisjointSetForest::FindRoot(Node n) {
  CheckNode(n);
  ++operations_;
  return Find(n);
}

DisjointSetForest::Node DisjointSetForest::Merge(Node x, Node y) {
  CheckNode(x);
  CheckNode(y);
  ++operations_;
  const Node r1 = Find(x);
  const Node r2 = Find(y);
  if (r1 == r2) return r1;
  if (nodes_[r1].rank > nodes_[r2].rank) {
    nodes_[r2].parent = r1;
    return r1;
  }
  if (nodes_[r2].rank > nodes_[r1].rank) {
    nodes_[r1].parent = r2;
    return r2;
  }
  nodes_[r2].parent = r1;
  ++nodes_[r1].rank;
  return r1;
}

DisjointSetForest::Node DisjointSetForest::RootOf(Node n) const {
  CheckNode(n);
  while (nodes_[n].parent != n) n = nodes_[n].parent;
  return n;
}

std::string DisjointSetForest::CheckInvariants() const {
  std::vector<std::size_t> class_size(nodes_.size(), 0);
  for (Node n = 0; n < nodes_.size(); ++n) {
    Node cur = n;
    std::size_t steps = 0;
    while (nodes_[cur].parent != cur) {
      if (nodes_[cur].parent >= nodes_.size()) return "dangling parent";
      if (nodes_[cur].rank >= nodes_[nodes_[cur].parent].rank) {
        return "rank does not increase from node " + std::to_string(cur);
      }
      cur = nodes_[cur].parent;
      if (++steps > nodes_.size()) return "parent cycle";
    }
    ++class_size[cur];
  }
  for (Node n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n].parent != n) continue;
    // rank(root) <= floor(log2(size)), i.e. 2^rank <= size.
    if ((std::size_t{1} << nodes_[n].rank) > class_size[n]) {
      return "root " + std::to_string(n) + " has rank " +
             std::to_string(nodes_[n].rank) + " for a class of size " +
             std::to_string(class_size[n]);
    }
  }
  return {};
}

}  // namespace stallings
