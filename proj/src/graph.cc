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

#include "stallings/graph.h"

#include <stdexcept>
#include <string>

namespace stallings {

LabeledGraph::LabeledGraph(Alphabet alphabet) : alphabet_(alphabet) {
  unfolded_.AddList();
}

void LabeledGraph::Reserve(std::size_t vertices, std::size_t edges) {
  forest_.Reserve(vertices);
  edge_lists_.Reserve(2 * edges, vertices);
  unfolded_.Reserve(vertices, 1);
  edges_.reserve(edges);
}

void LabeledGraph::ThrowUnknownVertex(VertexId v) {
  throw std::out_of_range("vertex " + std::to_string(v) + " does not exist");
}

VertexId LabeledGraph::AddVertex() {
  const VertexId v = forest_.MakeNode();
  edge_lists_.AddList();
  unfolded_.AddNodeSlot();
  return v;
}

EdgeId LabeledGraph::AddEdge(VertexId from, Generator label, VertexId to) {
  CheckVertex(from);
  CheckVertex(to);
  if (!alphabet_.Contains(label)) {
    throw std::out_of_range("edge label " + std::to_string(label) +
                            " is outside the alphabet");
  }
  const EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({from, to, static_cast<std::uint16_t>(label), true});
  const auto initial_slot = edge_lists_.AddNodeSlot();
  const auto terminal_slot = edge_lists_.AddNodeSlot();
  edge_lists_.AddNode(initial_slot, forest_.RootOf(from));
  edge_lists_.AddNode(terminal_slot, forest_.RootOf(to));
  ++live_edges_;
  return e;
}

void LabeledGraph::DeleteEdge(EdgeId e) {
  EdgeRecord& rec = edges_.at(e);
  if (!rec.live) return;
  edge_lists_.Remove(2 * e);
  edge_lists_.Remove(2 * e + 1);
  rec.live = false;
  --live_edges_;
}

void LabeledGraph::UpdateEdge(EdgeId e) {
  EdgeRecord& rec = edges_.at(e);
  rec.initial = forest_.FindRoot(rec.initial);
  rec.terminal = forest_.FindRoot(rec.terminal);
}

Incidence LabeledGraph::IncidenceAt(EdgeId e, VertexId v) {
  CheckVertex(v);
  if (!forest_.IsRoot(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not a root");
  }
  const EdgeRecord& rec = edges_.at(e);
  const VertexId u = forest_.FindRoot(rec.initial);
  const VertexId w = forest_.FindRoot(rec.terminal);
  if (u == v && w == v) return Incidence::kLoop;
  if (u == v) return Incidence::kOutgoing;
  if (w == v) return Incidence::kIncoming;
  throw std::invalid_argument("edge " + std::to_string(e) +
                              " is not incident to the class of vertex " +
                              std::to_string(v));
}

VertexId LabeledGraph::MergeClasses(VertexId a, VertexId b) {
  const VertexId ra = forest_.FindRoot(a);
  const VertexId rb = forest_.FindRoot(b);
  if (ra == rb) return ra;
  const VertexId winner = forest_.Merge(ra, rb);
  const VertexId loser = winner == ra ? rb : ra;
  UnmarkUnfolded(loser);
  edge_lists_.Concatenate(winner, loser);
  return winner;
}

void LabeledGraph::MarkUnfolded(VertexId v) {
  CheckVertex(v);
  if (!forest_.IsRoot(v)) {
    throw std::invalid_argument("only class roots can be marked unfolded; " +
                                std::to_string(v) + " is not a root");
  }
  if (unfolded_.IsDetached(v)) unfolded_.AddNode(v, 0);
}

void LabeledGraph::UnmarkUnfolded(VertexId v) {
  CheckVertex(v);
  unfolded_.Remove(v);
}

bool LabeledGraph::IsMarkedUnfolded(VertexId v) const {
  CheckVertex(v);
  return !unfolded_.IsDetached(v);
}

std::optional<VertexId> LabeledGraph::FirstUnfolded() const {
  const auto head = unfolded_.list(0).head;
  if (head == IntrusiveLists::kNil) return std::nullopt;
  return head;
}

void LabeledGraph::set_base(VertexId v) {
  CheckVertex(v);
  base_ = v;
}

}  // namespace stallings
