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

#ifndef STALLINGS_TESTS_GRAPH_CHECKS_H_
#define STALLINGS_TESTS_GRAPH_CHECKS_H_

#include <string>
#include <unordered_set>

#include "stallings/graph.h"

namespace stallings::testing {

// Structural invariants of a LabeledGraph; empty string when all hold.
inline std::string GraphInvariantViolation(const LabeledGraph& g) {
  const DisjointSetForest& forest = g.forest();
  std::size_t entries = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string list_problem = g.edge_lists().CheckWellFormed(v);
    if (!list_problem.empty()) return "edge list " + std::to_string(v) + ": " + list_problem;
    const bool root = forest.IsRoot(v);
    for (const auto slot : g.EdgeList(v)) {
      if (!root) return "non-root " + std::to_string(v) + " holds edge entries";
      ++entries;
      const auto& rec = g.edge(LabeledGraph::EdgeOfSlot(slot));
      if (!rec.live) return "deleted edge in edge list of " + std::to_string(v);
      const VertexId end = slot % 2 == 0 ? rec.initial : rec.terminal;
      if (forest.RootOf(end) != v) {
        return "entry in list of " + std::to_string(v) + " belongs to another class";
      }
    }
  }
  if (entries != 2 * g.live_edge_count()) {
    return "edge list entries " + std::to_string(entries) + " != 2 * live edges " +
           std::to_string(g.live_edge_count());
  }
  if (g.unfolded_list().CheckWellFormed(0) != "") return "UNFOLDED malformed";
  std::unordered_set<VertexId> seen;
  for (const auto v : g.UnfoldedVertices()) {
    if (!forest.IsRoot(v)) return "non-root " + std::to_string(v) + " in UNFOLDED";
    if (!seen.insert(v).second) return "duplicate in UNFOLDED";
  }
  return {};
}

}  // namespace stallings::testing

#endif  // STALLINGS_TESTS_GRAPH_CHECKS_H_
