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

#ifndef STALLINGS_DISJOINT_SETS_H_
#define STALLINGS_DISJOINT_SETS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stallings {

// Disjoint-set forest with path compression and union by rank.
//
// Instrumented: `operations()` counts FindRoot and Merge calls, and
// `traversals()` counts parent links followed while locating roots. Together
// with size() these are the quantities of the amortized bound
// traversals <= C * (operations + nodes) * (log*(nodes) + 1).
class DisjointSetForest {
 public:
  using Node = std::uint32_t;

  DisjointSetForest() = default;

  Node MakeNode();
  void Reserve(std::size_t n);

  // Returns the root of n's tree and points every node on the path at it.
  // Throws std::out_of_range for an unknown node.
  Node FindRoot(Node n);

  // Unites the classes of x and y and returns the surviving root. The root of
  // larger rank survives; on a tie the root of x survives and its rank grows.
  // Already-united arguments leave the forest unchanged.
  Node Merge(Node x, Node y);

  // Root lookup without compression or instrumentation, for read-only views.
  Node RootOf(Node n) const;

  bool IsRoot(Node n) const { return nodes_.at(n).parent == n; }
  Node parent(Node n) const { return nodes_.at(n).parent; }
  unsigned rank(Node n) const { return nodes_.at(n).rank; }
  std::size_t size() const { return nodes_.size(); }

  std::uint64_t traversals() const { return traversals_; }
  std::uint64_t operations() const { return operations_; }

  // Walks every parent chain; empty string when all invariants hold.
  std::string CheckInvariants() const;

 private:
  Node Find(Node n);
  void CheckNode(Node n) const {
    if (n >= nodes_.size()) [[unlikely]] ThrowUnknownNode(n);
  }
  [[noreturn]] static void ThrowUnknownNode(Node n);

  struct Entry {
    Node parent;
    std::uint8_t rank;
  };
  std::vector<Entry> nodes_;
  std::uint64_t traversals_ = 0;
  std::uint64_t operations_ = 0;
};

}  // namespace stallings

#endif  // STALLINGS_DISJOINT_SETS_H_
