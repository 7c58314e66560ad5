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

#ifndef STALLINGS_SUBGROUP_H_
#define STALLINGS_SUBGROUP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stallings/folded_graph.h"
#include "stallings/word.h"

namespace stallings {

// [F(X):H], either a finite count or infinite.
struct SubgroupIndex {
  std::optional<std::uint64_t> finite;

  bool IsFinite() const { return finite.has_value(); }
  // "infinite" or the decimal count.
  std::string ToString() const;
  friend bool operator==(const SubgroupIndex&, const SubgroupIndex&) = default;
};

struct MembershipResult {
  bool member = false;
  // Edges followed while tracing the reduced word.
  std::size_t steps = 0;
};

// Traces words from the base of a folded graph. Construction is O(V + E);
// each query is linear in the query length.
class MembershipTester {
 public:
  explicit MembershipTester(const FoldedGraph& f);

  // Reduces w and follows it from the base. Throws std::invalid_argument when
  // w uses a generator outside the graph's alphabet.
  MembershipResult Test(const Word& w) const;

 private:
  TransitionTable table_;
  std::uint32_t base_;
};

bool IsMember(const FoldedGraph& f, const Word& w, std::size_t* steps = nullptr);

SubgroupIndex Index(const FoldedGraph& f);

struct TreeEdge {
  std::uint32_t parent;    // vertex the edge was reached from
  std::size_t edge;        // index into FoldedGraph::edges
  Letter letter;           // label as read from parent to child
};

struct SpanningTree {
  std::vector<std::uint32_t> order;                  // BFS discovery order
  std::vector<std::optional<TreeEdge>> parent_edge;  // per vertex; empty at base
  std::vector<Word> path;                            // label of base -> v tree path
  std::size_t edge_count() const { return order.empty() ? 0 : order.size() - 1; }
};

// Breadth-first tree from the base in canonical edge order. Throws
// std::invalid_argument if the graph is disconnected or not folded.
SpanningTree BuildSpanningTree(const FoldedGraph& f);

// Tree-path labels in discovery order; prefix closed, base first ("1").
std::vector<Word> SchreierTransversal(const FoldedGraph& f);

// One reduced word path(u) * x * path(w)^-1 per non-tree edge u -x-> w,
// ordered by the canonical order of those edges.
std::vector<Word> NielsenBasis(const FoldedGraph& f);

// E - V + 1.
std::uint64_t SubgroupRank(const FoldedGraph& f);

struct SubgroupReport {
  SubgroupIndex index;
  std::uint64_t rank = 0;
  std::vector<Word> basis;
  std::vector<Word> transversal;
};

SubgroupReport Analyze(const FoldedGraph& f);

}  // namespace stallings

#endif  // STALLINGS_SUBGROUP_H_
