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

#include "stallings/subgroup.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace stallings {

std::string SubgroupIndex::ToString() const {
  return finite ? std::to_string(*finite) : std::string("infinite");
}

MembershipTester::MembershipTester(const FoldedGraph& f) : table_(f), base_(f.base) {}

MembershipResult MembershipTester::Test(const Word& w) const {
  const Word reduced = FreeReduce(w);
  for (const Letter& l : reduced) {
    if (l.generator >= static_cast<Generator>(table_.rank())) {
      throw std::invalid_argument("word uses generator '" +
                                  std::string(1, GeneratorSymbol(l.generator)) +
                                  "' outside an alphabet of rank " +
                                  std::to_string(table_.rank()));
    }
  }
  MembershipResult result;
  std::uint32_t v = base_;
  for (const Letter& l : reduced) {
    v = table_.Step(v, l);
    if (v == TransitionTable::kNone) return result;
    ++result.steps;
  }
  result.member = v == base_;
  return result;
}

bool IsMember(const FoldedGraph& f, const Word& w, std::size_t* steps) {
  const MembershipResult r = MembershipTester(f).Test(w);
  if (steps != nullptr) *steps = r.steps;
  return r.member;
}

SubgroupIndex Index(const FoldedGraph& f) {
  const TransitionTable table(f);
  for (std::uint32_t v = 0; v < f.vertex_count; ++v) {
    for (Generator x = 0; x < static_cast<Generator>(table.rank()); ++x) {
      if (table.Out(v, x) == TransitionTable::kNone ||
          table.In(v, x) == TransitionTable::kNone) {
        return {};
      }
    }
  }
  return {f.vertex_count};
}

SpanningTree BuildSpanningTree(const FoldedGraph& f) {
  const TransitionTable table(f);
  const auto rank = static_cast<std::size_t>(table.rank());
  std::vector<std::size_t> out_edge(f.vertex_count * rank);
  std::vector<std::size_t> in_edge(f.vertex_count * rank);
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    out_edge[f.edges[i].from * rank + f.edges[i].label] = i;
    in_edge[f.edges[i].to * rank + f.edges[i].label] = i;
  }

  SpanningTree tree;
  tree.parent_edge.assign(f.vertex_count, std::nullopt);
  tree.path.assign(f.vertex_count, Word());
  std::vector<bool> seen(f.vertex_count, false);
  tree.order.push_back(f.base);
  seen[f.base] = true;
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const std::uint32_t v = tree.order[head];
    for (const bool inverted : {false, true}) {
      for (Generator x = 0; x < static_cast<Generator>(rank); ++x) {
        const Letter l{x, inverted};
        const std::uint32_t w = table.Step(v, l);
        if (w == TransitionTable::kNone || seen[w]) continue;
        seen[w] = true;
        tree.order.push_back(w);
        const std::size_t edge = inverted ? in_edge[v * rank + x] : out_edge[v * rank + x];
        tree.parent_edge[w] = TreeEdge{v, edge, l};
        tree.path[w] = tree.path[v];
        tree.path[w].push_back(l);
      }
    }
  }
  if (tree.order.size() != f.vertex_count) {
    throw std::invalid_argument("graph is not connected; no spanning tree");
  }
  return tree;
}

std::vector<Word> SchreierTransversal(const FoldedGraph& f) {
  const SpanningTree tree = BuildSpanningTree(f);
  std::vector<Word> out;
  out.reserve(tree.order.size());
  for (const std::uint32_t v : tree.order) out.push_back(tree.path[v]);
  return out;
}

std::vector<Word> NielsenBasis(const FoldedGraph& f) {
  const SpanningTree tree = BuildSpanningTree(f);
  std::vector<bool> in_tree(f.edges.size(), false);
  for (const auto& pe : tree.parent_edge) {
    if (pe) in_tree[pe->edge] = true;
  }
  std::vector<std::uint32_t> position(f.vertex_count);
  for (std::uint32_t i = 0; i < tree.order.size(); ++i) position[tree.order[i]] = i;

  std::vector<std::size_t> cotree;
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    if (!in_tree[i]) cotree.push_back(i);
  }
  auto key = [&](std::size_t i) {
    const FoldedEdge& e = f.edges[i];
    return std::make_tuple(position[e.from], e.label, position[e.to]);
  };
  std::sort(cotree.begin(), cotree.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  std::vector<Word> basis;
  basis.reserve(cotree.size());
  for (const std::size_t i : cotree) {
    const FoldedEdge& e = f.edges[i];
    Word w = tree.path[e.from];
    w.push_back({e.label, false});
    w.Append(InvertWord(tree.path[e.to]));
    basis.push_back(FreeReduce(w));
  }
  return basis;
}

std::uint64_t SubgroupRank(const FoldedGraph& f) {
  return static_cast<std::uint64_t>(f.edges.size()) + 1 - f.vertex_count;
}

SubgroupReport Analyze(const FoldedGraph& f) {
  SubgroupReport report;
  report.index = Index(f);
  report.rank = SubgroupRank(f);
  report.basis = NielsenBasis(f);
  report.transversal = SchreierTransversal(f);
  return report;
}

}  // namespace stallings
