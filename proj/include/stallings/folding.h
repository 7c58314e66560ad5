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

#ifndef STALLINGS_FOLDING_H_
#define STALLINGS_FOLDING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stallings/folded_graph.h"
#include "stallings/graph.h"
#include "stallings/word.h"

namespace stallings {

enum class Direction { kOut, kIn };

// Two distinct live edges carrying the same label in the same direction at
// the inspected class.
struct UnfoldedPair {
  EdgeId first;
  EdgeId second;
  Generator label;
  Direction direction;
};

// nullopt means the vertex is folded.
using FoldStatus = std::optional<UnfoldedPair>;

// Distinct-target fold (A), parallel edges or double loop (B), loop plus
// non-loop edge (C).
enum class FoldCase : std::uint8_t { kDistinctTargets, kSameTarget, kLoopAndEdge };

char FoldCaseTag(FoldCase c);

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

struct FoldEvent {
  // Roots united by the fold; both kNoVertex in case B.
  VertexId winner = kNoVertex;
  VertexId loser = kNoVertex;
  EdgeId deleted = 0;
  VertexId deleted_from = 0;  // class roots at the moment of deletion
  VertexId deleted_to = 0;
  std::uint16_t deleted_label = 0;
  FoldCase fold_case = FoldCase::kSameTarget;

  bool united() const { return winner != kNoVertex; }
};

using FoldTrace = std::vector<FoldEvent>;

// One line per event: "<A|B|C> <winner|-> <loser|-> <from> <label> <to>".
std::string FormatTrace(const FoldTrace& trace);

struct FoldStats {
  std::uint64_t steps = 0;
  std::uint64_t classifications = 0;
  std::uint64_t entries_inspected = 0;
  // Per-step maxima, counting the classification that found the pair.
  std::uint64_t max_classifications_per_step = 0;
  std::uint64_t max_entries_per_step = 0;
  std::uint64_t max_entries_per_classification = 0;
  // Disjoint-set instrumentation over the whole run, construction included.
  std::uint64_t dsf_operations = 0;
  std::uint64_t dsf_traversals = 0;
  std::uint64_t dsf_nodes = 0;
};

struct FoldResult {
  FoldedGraph graph;
  FoldTrace trace;
  FoldStats stats;
  // Folded vertex of every vertex of the input graph.
  std::vector<std::uint32_t> vertex_of;
};

// Wedge of one loop per non-empty word at a fresh base vertex, with UNFOLDED
// seeded from the base. Words are freely reduced first.
LabeledGraph BuildBouquet(const std::vector<Word>& words, const Alphabet& alphabet);

// Scans the edge list of root v, updating each inspected edge, and returns
// the first pair sharing label and direction. Throws std::invalid_argument
// for a non-root. `entries` receives the number of list entries inspected.
FoldStatus ClassifyVertex(LabeledGraph& g, VertexId v, std::uint64_t* entries = nullptr);

// Performs one elementary fold of `pair` at root v and refreshes UNFOLDED for
// the affected classes. Exactly one edge is deleted.
FoldEvent FoldStep(LabeledGraph& g, VertexId v, const UnfoldedPair& pair,
                   FoldStats* stats = nullptr);

// Folds a graph whose UNFOLDED list is already seeded (as BuildBouquet does).
FoldResult Fold(LabeledGraph& g);

// Seeds UNFOLDED by classifying every vertex, then folds. Works on any
// labeled graph, connected or not.
FoldResult FoldArbitrary(LabeledGraph& g);

// Rebuilds a mutable graph with the same vertices, edges and base.
LabeledGraph ToLabeledGraph(const FoldedGraph& f);

// Convenience: bouquet construction followed by Fold.
FoldResult FoldWords(const std::vector<Word>& words, const Alphabet& alphabet);

}  // namespace stallings

#endif  // STALLINGS_FOLDING_H_
