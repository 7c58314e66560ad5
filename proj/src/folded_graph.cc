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

#include "stallings/folded_graph.h"

#include <stdexcept>

namespace stallings {

std::string FoldednessViolation(const FoldedGraph& f) {
  const auto rank = static_cast<std::size_t>(f.alphabet.rank());
  if (f.base >= f.vertex_count) return "base vertex out of range";
  std::vector<std::uint8_t> out(f.vertex_count * rank, 0);
  std::vector<std::uint8_t> in(f.vertex_count * rank, 0);
  for (const FoldedEdge& e : f.edges) {
    if (e.from >= f.vertex_count || e.to >= f.vertex_count) {
      return "edge endpoint out of range";
    }
    if (!f.alphabet.Contains(e.label)) return "edge label outside the alphabet";
    if (out[e.from * rank + e.label]++ != 0) {
      return "vertex " + std::to_string(e.from) + " has two outgoing '" +
             GeneratorSymbol(e.label) + "' edges";
    }
    if (in[e.to * rank + e.label]++ != 0) {
      return "vertex " + std::to_string(e.to) + " has two incoming '" +
             GeneratorSymbol(e.label) + "' edges";
    }
  }
  return {};
}

TransitionTable::TransitionTable(const FoldedGraph& f)
    : rank_(f.alphabet.rank()),
      vertex_count_(f.vertex_count),
      out_(static_cast<std::size_t>(f.vertex_count) * rank_, kNone),
      in_(static_cast<std::size_t>(f.vertex_count) * rank_, kNone) {
  if (const std::string why = FoldednessViolation(f); !why.empty()) {
    throw std::invalid_argument("graph is not folded: " + why);
  }
  for (const FoldedEdge& e : f.edges) {
    out_[e.from * rank_ + e.label] = e.to;
    in_[e.to * rank_ + e.label] = e.from;
  }
}

}  // namespace stallings
