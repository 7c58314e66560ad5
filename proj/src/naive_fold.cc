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

#include "stallings/naive_fold.h"

#include <algorithm>
#include <optional>
#include <utility>

namespace stallings {
namespace {

struct Triple {
  std::uint32_t from;
  Generator label;
  std::uint32_t to;
};

// First pair (i, j), i < j, of edges with equal label that share their
// initial or their terminal vertex, together with the two far endpoints.
struct Foldable {
  std::size_t keep;
  std::size_t drop;
  std::uint32_t far_keep;
  std::uint32_t far_drop;
};

std::optional<Foldable> FindFoldable(const std::vector<Triple>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].label != edges[j].label) continue;
      if (edges[i].from == edges[j].from) {
        return Foldable{i, j, edges[i].to, edges[j].to};
      }
      if (edges[i].to == edges[j].to) {
        return Foldable{i, j, edges[i].from, edges[j].from};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FoldedGraph NaiveFold(const LabeledGraph& g, std::vector<std::uint32_t>* vertex_of) {
  const std::size_t n = g.vertex_count();
  const DisjointSetForest& forest = g.forest();
  std::vector<std::uint32_t> cls(n);
  for (VertexId v = 0; v < n; ++v) cls[v] = forest.RootOf(v);
  std::vector<Triple> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (!rec.live) continue;
    edges.push_back({cls[rec.initial], rec.label, cls[rec.terminal]});
  }

  while (const auto f = FindFoldable(edges)) {
    const std::uint32_t keep = f->far_keep;
    const std::uint32_t gone = f->far_drop;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(f->drop));
    if (keep == gone) continue;
    for (auto& c : cls) {
      if (c == gone) c = keep;
    }
    for (auto& e : edges) {
      if (e.from == gone) e.from = keep;
      if (e.to == gone) e.to = keep;
    }
  }

  constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnassigned);
  std::uint32_t next = 0;
  if (n > 0) index[cls[g.base()]] = next++;
  for (VertexId v = 0; v < n; ++v) {
    if (index[cls[v]] == kUnassigned) index[cls[v]] = next++;
  }
  FoldedGraph out;
  out.alphabet = g.alphabet();
  out.base = 0;
  out.vertex_count = std::max<std::uint32_t>(next, 1);
  for (const Triple& e : edges) out.edges.push_back({index[e.from], e.label, index[e.to]});
  std::sort(out.edges.begin(), out.edges.end());
  if (vertex_of != nullptr) {
    vertex_of->resize(n);
    for (VertexId v = 0; v < n; ++v) (*vertex_of)[v] = index[cls[v]];
  }
  return out;
}

}  // namespace stallings
