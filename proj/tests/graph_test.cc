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

#include <gtest/gtest.h>

#include <iterator>

#include "graph_checks.h"
#include "stallings/folding.h"

namespace stallings {
namespace {

using testing::GraphInvariantViolation;

std::size_t ListSize(const LabeledGraph& g, VertexId v) {
  const auto range = g.EdgeList(v);
  return static_cast<std::size_t>(std::distance(range.begin(), range.end()));
}

TEST(GraphTest, AddVertex) {
  LabeledGraph g(Alphabet(2));
  const VertexId v = g.AddVertex();
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.live_edge_count(), 0u);
  const VertexId w = g.AddVertex();
  EXPECT_NE(g.Root(v), g.Root(w));
  EXPECT_FALSE(ClassifyVertex(g, v).has_value());
}

TEST(GraphTest, AddEdge) {
  LabeledGraph g(Alphabet(2));
  const VertexId u = g.AddVertex();
  const VertexId v = g.AddVertex();
  g.AddEdge(u, 0, v);
  EXPECT_EQ(ListSize(g, u), 1u);
  EXPECT_EQ(ListSize(g, v), 1u);
  EXPECT_EQ(g.live_edge_count(), 1u);
  g.AddEdge(u, 1, u);
  EXPECT_EQ(ListSize(g, u), 3u);
  EXPECT_EQ(g.live_edge_count(), 2u);
  EXPECT_EQ(GraphInvariantViolation(g), "");
}

TEST(GraphTest, AddEdgeRejectsBadLabelOrVertex) {
  LabeledGraph g(Alphabet(2));
  const VertexId u = g.AddVertex();
  EXPECT_THROW(g.AddEdge(u, 2, u), std::out_of_range);
  EXPECT_THROW(g.AddEdge(u, 0, 7), std::out_of_range);
}

TEST(GraphTest, DeleteEdge) {
  LabeledGraph g(Alphabet(2));
  const VertexId u = g.AddVertex();
  const VertexId v = g.AddVertex();
  const EdgeId e = g.AddEdge(u, 0, v);
  const EdgeId loop = g.AddEdge(v, 1, v);
  g.DeleteEdge(e);
  EXPECT_EQ(ListSize(g, u), 0u);
  EXPECT_EQ(ListSize(g, v), 2u);
  for (const auto slot : g.EdgeList(v)) EXPECT_NE(LabeledGraph::EdgeOfSlot(slot), e);
  g.DeleteEdge(loop);
  EXPECT_EQ(ListSize(g, v), 0u);
  EXPECT_EQ(g.live_edge_count(), 0u);
  g.DeleteEdge(loop);
  EXPECT_EQ(g.live_edge_count(), 0u);
  EXPECT_EQ(GraphInvariantViolation(g), "");
}

TEST(GraphTest, Incidence) {
  LabeledGraph g(Alphabet(2));
  const VertexId u = g.AddVertex();
  const VertexId v = g.AddVertex();
  const VertexId x = g.AddVertex();
  const EdgeId e = g.AddEdge(u, 0, v);
  const EdgeId loop = g.AddEdge(v, 1, v);
  EXPECT_EQ(g.IncidenceAt(e, u), Incidence::kOutgoing);
  EXPECT_EQ(g.IncidenceAt(e, v), Incidence::kIncoming);
  EXPECT_EQ(g.IncidenceAt(loop, v), Incidence::kLoop);
  EXPECT_THROW(g.IncidenceAt(e, x), std::invalid_argument);

  const VertexId root = g.MergeClasses(u, v);
  EXPECT_EQ(g.IncidenceAt(e, root), Incidence::kLoop);
  const VertexId other = root == u ? v : u;
  EXPECT_THROW(g.IncidenceAt(e, other), std::invalid_argument);
}

TEST(GraphTest, UpdateEdge) {
  LabeledGraph g(Alphabet(1));
  const VertexId u = g.AddVertex();
  const VertexId w = g.AddVertex();
  const VertexId z = g.AddVertex();
  const EdgeId e = g.AddEdge(w, 0, z);
  g.UpdateEdge(e);
  EXPECT_EQ(g.edge(e).initial, w);
  EXPECT_EQ(g.edge(e).terminal, z);
  ASSERT_EQ(g.MergeClasses(u, w), u);
  EXPECT_EQ(g.edge(e).initial, w);  // stale until updated
  g.UpdateEdge(e);
  EXPECT_EQ(g.edge(e).initial, u);
  g.UpdateEdge(e);
  EXPECT_EQ(g.edge(e).initial, u);
  EXPECT_EQ(g.edge(e).terminal, z);
}

TEST(GraphTest, UnfoldedMarks) {
  LabeledGraph g(Alphabet(1));
  const VertexId u = g.AddVertex();
  const VertexId w = g.AddVertex();
  g.MarkUnfolded(u);
  g.UnmarkUnfolded(u);
  EXPECT_FALSE(g.FirstUnfolded().has_value());

  g.MarkUnfolded(u);
  g.MarkUnfolded(u);
  g.MarkUnfolded(w);
  std::vector<VertexId> marked(g.UnfoldedVertices().begin(), g.UnfoldedVertices().end());
  EXPECT_EQ(marked, (std::vector<VertexId>{u, w}));

  ASSERT_EQ(g.MergeClasses(u, w), u);
  EXPECT_FALSE(g.IsMarkedUnfolded(w));
  EXPECT_TRUE(g.IsMarkedUnfolded(u));
  EXPECT_THROW(g.MarkUnfolded(w), std::invalid_argument);
  EXPECT_EQ(GraphInvariantViolation(g), "");
}

TEST(GraphTest, MergeConcatenatesEdgeLists) {
  LabeledGraph g(Alphabet(2));
  const VertexId u = g.AddVertex();
  const VertexId w = g.AddVertex();
  const VertexId z = g.AddVertex();
  g.AddEdge(u, 0, z);
  g.AddEdge(w, 1, z);
  const VertexId root = g.MergeClasses(u, w);
  EXPECT_EQ(ListSize(g, root), 2u);
  EXPECT_EQ(ListSize(g, root == u ? w : u), 0u);
  EXPECT_EQ(GraphInvariantViolation(g), "");
}

}  // namespace
}  // namespace stallings
