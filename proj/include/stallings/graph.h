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

#ifndef STALLINGS_GRAPH_H_
#define STALLINGS_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stallings/disjoint_sets.h"
#include "stallings/linked_list.h"
#include "stallings/word.h"

namespace stallings {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Incidence { kOutgoing, kIncoming, kLoop };

// Directed labeled graph in which vertices are grouped into equivalence
// classes by a disjoint-set forest.
//
// Every edge owns two list slots: slot 2e sits in the edge list at its
// initial vertex and slot 2e+1 in the edge list at its terminal vertex. A
// loop therefore contributes two entries to one edge list. When classes are
// merged their edge lists are concatenated, so the edge list of a root holds
// every live edge incident to its class. Stored endpoints may be stale
// (non-roots); UpdateEdge() repairs them on demand.
//
// Labels are always positive generators. A letter x^-1 of a word is an
// x-labeled edge traversed backwards.
class LabeledGraph {
 public:
  struct EdgeRecord {
    VertexId initial;
    VertexId terminal;
    std::uint16_t label;  // a Generator; the alphabet has at most 26
    bool live;
  };

  explicit LabeledGraph(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }

  VertexId AddVertex();
  // Throws std::out_of_range for unknown vertices or a label outside the
  // alphabet.
  EdgeId AddEdge(VertexId from, Generator label, VertexId to);
  // Detaches both slots of e. No-op on an already deleted edge.
  void DeleteEdge(EdgeId e);

  // Class representative of v (with path compression).
  VertexId Root(VertexId v) { return forest_.FindRoot(v); }

  // Incidence of e at the class rooted at v. Throws std::invalid_argument if
  // v is not a root or e does not touch its class.
  Incidence IncidenceAt(EdgeId e, VertexId v);

  // Rewrites e's stored endpoints to their current roots.
  void UpdateEdge(EdgeId e);

  // Unites the classes of a and b: the losing root leaves UNFOLDED and its
  // edge list is appended to the winner's. Returns the winning root.
  VertexId MergeClasses(VertexId a, VertexId b);

  // UNFOLDED membership. Marking requires a root (std::invalid_argument
  // otherwise); unmarking accepts any vertex. Both are idempotent.
  void MarkUnfolded(VertexId v);
  void UnmarkUnfolded(VertexId v);
  bool IsMarkedUnfolded(VertexId v) const;
  std::optional<VertexId> FirstUnfolded() const;
  IntrusiveLists::Range UnfoldedVertices() const { return unfolded_.Nodes(0); }

  // Slot ids in the edge list stored at v. The edge of slot s is s / 2, and
  // s % 2 tells whether it is the edge's initial (0) or terminal (1) slot.
  IntrusiveLists::Range EdgeList(VertexId v) const { return edge_lists_.Nodes(v); }
  static EdgeId EdgeOfSlot(IntrusiveLists::NodeId slot) { return slot >> 1; }

  VertexId base() const { return base_; }
  void set_base(VertexId v);

  std::size_t vertex_count() const { return forest_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t live_edge_count() const { return live_edges_; }
  const EdgeRecord& edge(EdgeId e) const { return edges_.at(e); }

  const DisjointSetForest& forest() const { return forest_; }
  const IntrusiveLists& edge_lists() const { return edge_lists_; }
  const IntrusiveLists& unfolded_list() const { return unfolded_; }

  void Reserve(std::size_t vertices, std::size_t edges);

 private:
  void CheckVertex(VertexId v) const {
    if (v >= forest_.size()) [[unlikely]] ThrowUnknownVertex(v);
  }
  [[noreturn]] static void ThrowUnknownVertex(VertexId v);

  Alphabet alphabet_;
  DisjointSetForest forest_;
  IntrusiveLists edge_lists_;  // one list per vertex
  IntrusiveLists unfolded_;    // one node per vertex, a single list
  std::vector<EdgeRecord> edges_;
  VertexId base_ = 0;
  std::size_t live_edges_ = 0;
};

}  // namespace stallings

#endif  // STALLINGS_GRAPH_H_
