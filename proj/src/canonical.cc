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

#include "stallings/canonical.h"

#include <algorithm>
#include <stdexcept>

namespace stallings {

std::vector<std::uint32_t> DiscoveryOrder(const FoldedGraph& f) {
  const TransitionTable table(f);
  std::vector<bool> seen(f.vertex_count, false);
  std::vector<std::uint32_t> order;
  order.reserve(f.vertex_count);
  order.push_back(f.base);
  seen[f.base] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t v = order[head];
    for (const bool inverted : {false, true}) {
      for (Generator x = 0; x < static_cast<Generator>(table.rank()); ++x) {
        const std::uint32_t w = table.Step(v, {x, inverted});
        if (w != TransitionTable::kNone && !seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

FoldedGraph Canonicalize(const FoldedGraph& f) {
  const std::vector<std::uint32_t> order = DiscoveryOrder(f);
  if (order.size() != f.vertex_count) {
    throw std::invalid_argument("graph is not connected: " +
                                std::to_string(f.vertex_count - order.size()) +
                                " vertices unreachable from the base");
  }
  std::vector<std::uint32_t> rename(f.vertex_count);
  for (std::uint32_t i = 0; i < order.size(); ++i) rename[order[i]] = i;
  FoldedGraph out;
  out.alphabet = f.alphabet;
  out.base = 0;
  out.vertex_count = f.vertex_count;
  out.edges.reserve(f.edges.size());
  for (const FoldedEdge& e : f.edges) {
    out.edges.push_back({rename[e.from], e.label, rename[e.to]});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string CanonicalForm(const FoldedGraph& f) {
  const FoldedGraph c = Canonicalize(f);
  std::string code;
  for (const FoldedEdge& e : c.edges) {
    if (!code.empty()) code.push_back(';');
    code += std::to_string(e.from);
    code.push_back(' ');
    code.push_back(GeneratorSymbol(e.label));
    code.push_back(' ');
    code += std::to_string(e.to);
  }
  return code;
}

}  // namespace stallings
