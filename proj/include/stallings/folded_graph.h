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

#ifndef STALLINGS_FOLDED_GRAPH_H_
#define STALLINGS_FOLDED_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stallings/word.h"

namespace stallings {

struct FoldedEdge {
  std::uint32_t from;
  Generator label;
  std::uint32_t to;

  friend auto operator<=>(const FoldedEdge&, const FoldedEdge&) = default;
};

// Immutable result of folding: vertices are 0..vertex_count-1 and `edges` is
// sorted by (from, label, to).
struct FoldedGraph {
  Alphabet alphabet{1};
  std::uint32_t base = 0;
  std::uint32_t vertex_count = 1;
  std::vector<FoldedEdge> edges;

  friend bool operator==(const FoldedGraph&, const FoldedGraph&) = default;
};

// Empty when every (vertex, label) has at most one outgoing and one incoming
// edge and all indices are in range; otherwise describes the first violation.
std::string FoldednessViolation(const FoldedGraph& f);
inline bool IsFolded(const FoldedGraph& f) { return FoldednessViolation(f).empty(); }

// Dense per-(vertex, label) transition arrays of a folded graph.
class TransitionTable {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  // Throws std::invalid_argument if `f` is not folded.
  explicit TransitionTable(const FoldedGraph& f);

  std::uint32_t Out(std::uint32_t v, Generator x) const { return out_[v * rank_ + x]; }
  std::uint32_t In(std::uint32_t v, Generator x) const { return in_[v * rank_ + x]; }
  // Follows x forwards, or backwards for an inverted letter.
  std::uint32_t Step(std::uint32_t v, Letter l) const {
    return l.inverted ? In(v, l.generator) : Out(v, l.generator);
  }
  int rank() const { return rank_; }
  std::uint32_t vertex_count() const { return vertex_count_; }

 private:
  int rank_;
  std::uint32_t vertex_count_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
};

}  // namespace stallings

#endif  // STALLINGS_FOLDED_GRAPH_H_
