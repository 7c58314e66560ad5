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

#include "stallings/folding.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace stallings {
namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

VertexId FarEnd(const LabeledGraph::EdgeRecord& rec, Direction d) {
  return d == Direction::kOut ? rec.terminal : rec.initial;
}

struct StepCounters {
  std::uint64_t classifications = 0;
  std::uint64_t entries = 0;
};

void Record(FoldStats* stats, std::uint64_t entries) {
  if (stats == nullptr) return;
  ++stats->classifications;
  stats->entries_inspected += entries;
  stats->max_entries_per_classification =
      std::max(stats->max_entries_per_classification, entries);
}

// Re-classifies root v and makes its UNFOLDED membership match.
void Refresh(LabeledGraph& g, VertexId v, StepCounters& counters, FoldStats* stats) {
  std::uint64_t entries = 0;
  const FoldStatus status = ClassifyVertex(g, v, &entries);
  ++counters.classifications;
  counters.entries += entries;
  Record(stats, entries);
  if (status) {
    g.MarkUnfolded(v);
  } else {
    g.UnmarkUnfolded(v);
  }
}

FoldedGraph Compact(LabeledGraph& g, std::vector<std::uint32_t>* vertex_of) {
  constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> index(n, kUnassigned);
  FoldedGraph f;
  f.alphabet = g.alphabet();
  f.base = 0;
  std::uint32_t next = 0;
  if (n > 0) index[g.Root(g.base())] = next++;
  for (VertexId v = 0; v < n; ++v) {
    if (g.Root(v) == v && index[v] == kUnassigned) index[v] = next++;
  }
  f.vertex_count = std::max<std::uint32_t>(next, 1);
  f.edges.reserve(g.live_edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).live) continue;
    g.UpdateEdge(e);
    const auto& rec = g.edge(e);
    f.edges.push_back({index[rec.initial], rec.label, index[rec.terminal]});
  }
  std::sort(f.edges.begin(), f.edges.end());
  if (vertex_of != nullptr) {
    vertex_of->resize(n);
    for (VertexId v = 0; v < n; ++v) (*vertex_of)[v] = index[g.Root(v)];
  }
  return f;
}

FoldResult RunFoldLoop(LabeledGraph& g) {
  FoldResult result;
  FoldStats& stats = result.stats;
  // Every step deletes a live edge.
  result.trace.reserve(g.live_edge_count());
  while (const auto head = g.FirstUnfolded()) {
    const VertexId v = *head;
    std::uint64_t entries = 0;
    const FoldStatus status = ClassifyVertex(g, v, &entries);
    Record(&stats, entries);
    if (!status) {
      g.UnmarkUnfolded(v);
      continue;
    }
    const std::uint64_t before_classifications = stats.classifications;
    const std::uint64_t before_entries = stats.entries_inspected;
    result.trace.push_back(FoldStep(g, v, *status, &stats));
    stats.max_classifications_per_step =
        std::max(stats.max_classifications_per_step,
                 1 + stats.classifications - before_classifications);
    stats.max_entries_per_step =
        std::max(stats.max_entries_per_step,
                 entries + stats.entries_inspected - before_entries);
  }
  result.graph = Compact(g, &result.vertex_of);
  stats.dsf_operations = g.forest().operations();
  stats.dsf_traversals = g.forest().traversals();
  stats.dsf_nodes = g.forest().size();
  return result;
}

}  // namespace

char FoldCaseTag(FoldCase c) {
  switch (c) {
    case FoldCase::kDistinctTargets:
      return 'A';
    case FoldCase::kSameTarget:
      return 'B';
    case FoldCase::kLoopAndEdge:
      return 'C';
  }
  return '?';
}

std::string FormatTrace(const FoldTrace& trace) {
  std::ostringstream out;
  for (const FoldEvent& ev : trace) {
    out << FoldCaseTag(ev.fold_case) << ' ';
    if (ev.united()) {
      out << ev.winner << ' ' << ev.loser;
    } else {
      out << "- -";
    }
    out << ' ' << ev.deleted_from << ' ' << GeneratorSymbol(ev.deleted_label) << ' '
        << ev.deleted_to << '\n';
  }
  return out.str();
}

LabeledGraph BuildBouquet(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::vector<Word> reduced;
  reduced.reserve(words.size());
  std::size_t letters = 0;
  for (const Word& w : words) {
    reduced.push_back(FreeReduce(w));
    letters += reduced.back().size();
  }
  LabeledGraph g(alphabet);
  g.Reserve(letters + 1, letters);
  const VertexId base = g.AddVertex();
  g.set_base(base);
  // Letters are laid out position by position across all words, which is the
  // order in which folding sweeps the bouquet outward from the base.
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    if (!reduced[j].empty()) active.push_back(j);
  }
  std::vector<VertexId> cur(reduced.size(), base);
  for (std::size_t pos = 0; !active.empty(); ++pos) {
    std::size_t kept = 0;
    for (const std::size_t j : active) {
      const Word& w = reduced[j];
      const VertexId next = pos + 1 == w.size() ? base : g.AddVertex();
      const Letter l = w[pos];
      if (l.inverted) {
        g.AddEdge(next, l.generator, cur[j]);
      } else {
        g.AddEdge(cur[j], l.generator, next);
      }
      cur[j] = next;
      if (pos + 1 < w.size()) active[kept++] = j;
    }
    active.resize(kept);
  }
  // Interior vertices of reduced loops are folded; only the base can fail.
  if (ClassifyVertex(g, base)) g.MarkUnfolded(base);
  return g;
}

FoldStatus ClassifyVertex(LabeledGraph& g, VertexId v, std::uint64_t* entries) {
  if (g.Root(v) != v) {
    throw std::invalid_argument("ClassifyVertex: vertex " + std::to_string(v) +
                                " is not a class root");
  }
  // Occupant of each (label, direction) key: index 2*label is outgoing,
  // 2*label+1 incoming.
  std::array<EdgeId, 2 * kMaxAlphabetRank> occupant;
  occupant.fill(kNoEdge);
  std::uint64_t inspected = 0;
  FoldStatus found;
  for (const auto slot : g.EdgeList(v)) {
    ++inspected;
    const EdgeId e = LabeledGraph::EdgeOfSlot(slot);
    g.UpdateEdge(e);
    const auto& rec = g.edge(e);
    const bool out = rec.initial == v;
    const bool in = rec.terminal == v;
    for (const Direction d : {Direction::kOut, Direction::kIn}) {
      if (d == Direction::kOut ? !out : !in) continue;
      EdgeId& slot_edge = occupant[2 * rec.label + (d == Direction::kIn ? 1 : 0)];
      if (slot_edge == kNoEdge) {
        slot_edge = e;
      } else if (slot_edge != e) {
        found = UnfoldedPair{slot_edge, e, rec.label, d};
        break;
      }
    }
    if (found) break;
  }
  if (entries != nullptr) *entries = inspected;
  return found;
}

FoldEvent FoldStep(LabeledGraph& g, VertexId v, const UnfoldedPair& pair,
                   FoldStats* stats) {
  const EdgeId e1 = pair.first;
  const EdgeId e2 = pair.second;
  if (e1 == e2 || !g.edge(e1).live || !g.edge(e2).live || g.Root(v) != v ||
      g.edge(e1).label != g.edge(e2).label) {
    throw std::invalid_argument("FoldStep: edges do not form a foldable pair");
  }
  g.UpdateEdge(e1);
  g.UpdateEdge(e2);
  const VertexId near1 = pair.direction == Direction::kOut ? g.edge(e1).initial
                                                           : g.edge(e1).terminal;
  const VertexId near2 = pair.direction == Direction::kOut ? g.edge(e2).initial
                                                           : g.edge(e2).terminal;
  if (near1 != v || near2 != v) {
    throw std::invalid_argument("FoldStep: edges do not share the given direction at v");
  }
  const VertexId r = FarEnd(g.edge(e1), pair.direction);
  const VertexId s = FarEnd(g.edge(e2), pair.direction);

  FoldEvent ev;
  ev.deleted_label = static_cast<std::uint16_t>(pair.label);
  std::array<VertexId, 2> affected{};
  std::size_t affected_count = 0;
  EdgeId doomed = e2;

  if (r == s) {
    ev.fold_case = FoldCase::kSameTarget;
    affected[affected_count++] = v;
    if (r != v) affected[affected_count++] = r;
  } else if (r == v || s == v) {
    // One edge is a loop at v; its partner runs to another class w.
    ev.fold_case = FoldCase::kLoopAndEdge;
    const VertexId w = r == v ? s : r;
    doomed = r == v ? e2 : e1;
    const VertexId winner = g.MergeClasses(v, w);
    ev.winner = winner;
    ev.loser = winner == v ? w : v;
    affected[affected_count++] = winner;
  } else {
    ev.fold_case = FoldCase::kDistinctTargets;
    const VertexId winner = g.MergeClasses(r, s);
    ev.winner = winner;
    ev.loser = winner == r ? s : r;
    affected[affected_count++] = v;
    affected[affected_count++] = winner;
  }

  g.UpdateEdge(doomed);
  ev.deleted = doomed;
  ev.deleted_from = g.edge(doomed).initial;
  ev.deleted_to = g.edge(doomed).terminal;
  g.DeleteEdge(doomed);

  StepCounters counters;
  for (std::size_t i = 0; i < affected_count; ++i) {
    Refresh(g, affected[i], counters, stats);
  }
  if (stats != nullptr) ++stats->steps;
  return ev;
}

FoldResult Fold(LabeledGraph& g) { return RunFoldLoop(g); }

FoldResult FoldArbitrary(LabeledGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.Root(v) != v) continue;
    if (ClassifyVertex(g, v)) {
      g.MarkUnfolded(v);
    } else {
      g.UnmarkUnfolded(v);
    }
  }
  return RunFoldLoop(g);
}

LabeledGraph ToLabeledGraph(const FoldedGraph& f) {
  LabeledGraph g(f.alphabet);
  g.Reserve(f.vertex_count, f.edges.size());
  for (std::uint32_t v = 0; v < f.vertex_count; ++v) g.AddVertex();
  for (const FoldedEdge& e : f.edges) g.AddEdge(e.from, e.label, e.to);
  g.set_base(f.base);
  return g;
}

FoldResult FoldWords(const std::vector<Word>& words, const Alphabet& alphabet) {
  LabeledGraph g = BuildBouquet(words, alphabet);
  return Fold(g);
}

}  // namespace stallings
