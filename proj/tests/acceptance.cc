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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "coset_oracle.h"
#include "stallings/bench.h"
#include "stallings/canonical.h"
#include "stallings/disjoint_sets.h"
#include "stallings/folding.h"
#include "stallings/linked_list.h"
#include "stallings/naive_fold.h"
#include "stallings/subgroup.h"

namespace stallings {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void Report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Word ParseRank2(const char* text) { return ParseWord(text, Alphabet(2)); }

std::vector<std::string> Format(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(FormatWord(w));
  return out;
}

// Shared tallies for the criteria that range over other criteria's instances.
struct Tally {
  std::size_t bound_checked = 0;
  std::size_t bound_failed = 0;
  std::size_t folded_checked = 0;
  std::size_t folded_failed = 0;
  std::size_t generators_checked = 0;
  std::size_t generators_failed = 0;
  std::size_t regenerations_checked = 0;
  std::size_t regenerations_failed = 0;
  std::size_t queries = 0;
  std::size_t query_step_mismatches = 0;

  void Bound(const FoldStats& s) {
    ++bound_checked;
    if (!AmortizedBoundHolds(s.dsf_traversals, s.dsf_operations, s.dsf_nodes)) ++bound_failed;
  }
  void Folded(const FoldedGraph& f) {
    ++folded_checked;
    if (!IsFolded(f)) ++folded_failed;
  }
};

Tally tally;

void ExampleReproduction() {
  const auto start = Clock::now();
  const std::vector<Word> gens = {ParseRank2("abba"), ParseRank2("Aba"), ParseRank2("aaa")};
  const FoldResult result = FoldWords(gens, Alphabet(2));
  const FoldedGraph& f = result.graph;
  const SubgroupReport report = Analyze(f);
  const std::string regenerated = CanonicalForm(FoldWords(report.basis, Alphabet(2)).graph);
  const double ms = MillisSince(start);
  tally.Folded(f);

  const bool ok = f.vertex_count == 1 && CanonicalForm(f) == "0 a 0;0 b 0" &&
                  report.index == SubgroupIndex{1} && report.basis.size() == 2 &&
                  regenerated == "0 a 0;0 b 0" &&
                  Format(report.transversal) == std::vector<std::string>{"1"} && ms < 10.0;
  char detail[160];
  std::snprintf(detail, sizeof detail, "V=%u code=\"%s\" index=%s basis=%zu %.3f ms (< 10)",
                f.vertex_count, CanonicalForm(f).c_str(), report.index.ToString().c_str(),
                report.basis.size(), ms);
  Report(1, "example reproduction", ok, detail);
}

void OracleEquivalence() {
  constexpr std::size_t kTrials = 1000;
  constexpr std::uint64_t kSeed = 20260101;
  const InstanceConfig config;
  std::size_t agree = 0;
  const auto start = Clock::now();
  for (std::size_t t = 0; t < kTrials; ++t) {
    Rng rng(TrialSeed(kSeed, t));
    const Instance inst = RandomInstance(config, rng);
    LabeledGraph g = BuildBouquet(inst.words, inst.alphabet);
    const FoldedGraph expected = NaiveFold(g);
    const FoldResult got = Fold(g);
    if (CanonicalForm(got.graph) == CanonicalForm(expected)) ++agree;

    tally.Bound(got.stats);
    tally.Folded(got.graph);
    const MembershipTester member(got.graph);
    for (const Word& w : inst.words) {
      ++tally.generators_checked;
      if (!member.Test(w).member) ++tally.generators_failed;
    }
    if (inst.words.size() <= 4) {
      ++tally.regenerations_checked;
      const std::vector<Word> basis = NielsenBasis(got.graph);
      if (CanonicalForm(FoldWords(basis, inst.alphabet).graph) != CanonicalForm(got.graph)) {
        ++tally.regenerations_failed;
      }
    }
    // Queries: random products of generators, so every walk completes.
    std::uniform_int_distribution<std::size_t> factors(0, 8);
    std::uniform_int_distribution<std::size_t> pick(0, inst.words.size() - 1);
    std::bernoulli_distribution invert(0.5);
    for (int q = 0; q < 100; ++q) {
      Word w;
      const std::size_t k = factors(rng);
      for (std::size_t i = 0; i < k; ++i) {
        const Word& g_i = inst.words[pick(rng)];
        w.Append(invert(rng) ? InvertWord(g_i) : g_i);
      }
      const MembershipResult r = member.Test(w);
      ++tally.queries;
      if (!r.member || r.steps != FreeReduce(w).size()) ++tally.query_step_mismatches;
    }
  }
  const double seconds = MillisSince(start) / 1000.0;
  char detail[160];
  std::snprintf(detail, sizeof detail, "%zu/%zu canonical forms agree, %.2f s (< 60)", agree,
                kTrials, seconds);
  Report(2, "oracle equivalence", agree == kTrials && seconds < 60.0, detail);
}

void DerivedInstance() {
  using testing::CosetClasses;
  using testing::ExponentSum;
  using testing::ProductsInBall;
  using testing::ReducedBall;

  const std::vector<Word> gens = {ParseRank2("aa"), ParseRank2("b"), ParseRank2("abA")};
  const FoldedGraph f = FoldWords(gens, Alphabet(2)).graph;
  tally.Folded(f);
  const SubgroupReport report = Analyze(f);

  // Brute force: reduced products of at most 8 generator factors, restricted
  // to the ball of radius 8. The a-exponent parity vanishes on every
  // generator, so odd-parity words are certainly outside H; every even-parity
  // word of the ball must show up as a product.
  const std::vector<Word> ball = ReducedBall(2, 8);
  const std::set<Word> products = ProductsInBall(gens, 8, 8);
  bool brute_complete = true;
  for (const Word& w : ball) {
    const bool even = ExponentSum(w, 0) % 2 == 0;
    if ((products.count(w) == 1) != even) brute_complete = false;
  }
  const auto brute_member = [&](const Word& w) { return products.count(w) == 1; };
  const MembershipTester tester(f);
  std::size_t disagreements = 0;
  for (const Word& w : ball) {
    if (tester.Test(w).member != brute_member(w)) ++disagreements;
  }
  const auto classes = CosetClasses(ReducedBall(2, 4), brute_member);
  const auto transversal_classes = CosetClasses(report.transversal, brute_member);

  const bool ok = brute_complete && disagreements == 0 && classes.size() == 2 &&
                  report.index == SubgroupIndex{2} &&
                  Format(report.transversal) == std::vector<std::string>{"1", "a"} &&
                  transversal_classes.size() == report.transversal.size() &&
                  report.basis.size() == 3 && !IsMember(f, ParseRank2("a")) &&
                  IsMember(f, ParseRank2("aa")) && !brute_member(ParseRank2("a")) &&
                  brute_member(ParseRank2("aa"));
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "index=%s transversal={%s} basis=%zu; brute force: %zu cosets, "
                "%zu/%zu ball words agree",
                report.index.ToString().c_str(),
                report.transversal.size() == 2
                    ? (FormatWord(report.transversal[0]) + "," +
                       FormatWord(report.transversal[1])).c_str()
                    : "?",
                report.basis.size(), classes.size(), ball.size() - disagreements, ball.size());
  Report(3, "derived instance", ok, detail);
}

void Scaling() {
  // Single large instance.
  Rng rng(777);
  const Instance big = ScalingInstance(1000000, rng);
  const auto start = Clock::now();
  LabeledGraph g = BuildBouquet(big.words, big.alphabet);
  const FoldResult result = Fold(g);
  const double big_seconds = MillisSince(start) / 1000.0;
  tally.Bound(result.stats);
  tally.Folded(result.graph);

  const std::vector<std::size_t> sizes = {1u << 16, 1u << 17, 1u << 18, 1u << 19, 1u << 20};
  const std::vector<ScalingRow> rows = RunScaling(sizes, 5, 4242);
  double worst_ratio = 0;
  std::string ratios;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double ratio = rows[i + 1].time_ns / rows[i].time_ns;
    worst_ratio = std::max(worst_ratio, ratio);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%s%.2f", i ? "," : "", ratio);
    ratios += buf;
  }
  for (const ScalingRow& r : rows) {
    ++tally.bound_checked;
    if (!r.bound_holds) ++tally.bound_failed;
  }
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "N=10^6 in %.3f s (<= 5); doubling ratios %s, max %.2f (<= 2.5)", big_seconds,
                ratios.c_str(), worst_ratio);
  Report(4, "near-linear scaling", big_seconds <= 5.0 && worst_ratio <= 2.5, detail);
}

void AmortizedBound() {
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu/%zu instances within 10*(ops+nodes)*(log*(nodes)+1)",
                tally.bound_checked - tally.bound_failed, tally.bound_checked);
  Report(5, "amortized bound", tally.bound_failed == 0 && tally.bound_checked > 0, detail);
}

void MembershipLinearity() {
  const FoldedGraph f =
      FoldWords({ParseRank2("aa"), ParseRank2("b"), ParseRank2("abA")}, Alphabet(2)).graph;
  const MembershipTester tester(f);
  Rng rng(99);
  const Word query = RandomReducedWord(1000000, 2, rng);
  const auto start = Clock::now();
  const MembershipResult r = tester.Test(query);
  const double ms = MillisSince(start);
  const bool steps_exact = r.steps == query.size();
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%zu/%zu queries with steps == |reduced w|; 10^6-letter query %.3f ms (<= 50), "
                "steps=%zu",
                tally.queries - tally.query_step_mismatches, tally.queries, ms, r.steps);
  Report(6, "membership linearity",
         tally.query_step_mismatches == 0 && tally.queries > 0 && steps_exact && ms <= 50.0,
         detail);
}

void LogStarValues() {
  bool ok = LogStar(1) == 0 && LogStar(2) == 1 && LogStar(16) == 3 && LogStar(65536) == 4 &&
            LogStarPow2(65536) == 5;
  std::size_t identity = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const unsigned lhs = n < 64 ? LogStar(std::uint64_t{1} << n) : LogStarPow2(64);
    if (lhs == LogStar(n) + 1) ++identity;
  }
  ok = ok && identity == 64;
  char detail[120];
  std::snprintf(detail, sizeof detail,
                "log*(1,2,16,65536)=%u,%u,%u,%u log*(2^65536)=%u; identity %zu/64", LogStar(1),
                LogStar(2), LogStar(16), LogStar(65536), LogStarPow2(65536), identity);
  Report(7, "log* values", ok, detail);
}

std::string ListProperty() {
  constexpr std::size_t kNodes = 2048;
  constexpr std::size_t kLists = 64;
  constexpr int kOps = 100000;
  IntrusiveLists lists(kNodes, kLists);
  std::vector<std::vector<IntrusiveLists::NodeId>> model(kLists);
  std::vector<IntrusiveLists::ListId> where(kNodes, IntrusiveLists::kNil);
  Rng rng(1);
  std::uniform_int_distribution<std::size_t> node(0, kNodes - 1);
  std::uniform_int_distribution<std::size_t> list(0, kLists - 1);
  std::uniform_int_distribution<int> op(0, 9);
  std::uint64_t max_writes = 0;
  for (int i = 0; i < kOps; ++i) {
    const std::uint64_t before = lists.writes();
    std::vector<std::size_t> touched;
    const int kind = op(rng);
    if (kind < 5) {
      const std::size_t n = node(rng);
      if (where[n] != IntrusiveLists::kNil) continue;
      const std::size_t l = list(rng);
      lists.AddNode(static_cast<IntrusiveLists::NodeId>(n), static_cast<IntrusiveLists::ListId>(l));
      model[l].push_back(static_cast<IntrusiveLists::NodeId>(n));
      where[n] = static_cast<IntrusiveLists::ListId>(l);
      touched.push_back(l);
    } else if (kind < 9) {
      const std::size_t n = node(rng);
      lists.Remove(static_cast<IntrusiveLists::NodeId>(n));
      if (where[n] != IntrusiveLists::kNil) {
        auto& m = model[where[n]];
        m.erase(std::find(m.begin(), m.end(), n));
        touched.push_back(where[n]);
        where[n] = IntrusiveLists::kNil;
      }
    } else {
      const std::size_t a = list(rng), b = list(rng);
      if (a == b) continue;
      lists.Concatenate(static_cast<IntrusiveLists::ListId>(a),
                        static_cast<IntrusiveLists::ListId>(b));
      for (const auto n : model[b]) where[n] = static_cast<IntrusiveLists::ListId>(a);
      model[a].insert(model[a].end(), model[b].begin(), model[b].end());
      model[b].clear();
      touched = {a, b};
    }
    max_writes = std::max(max_writes, lists.writes() - before);
    for (const std::size_t l : touched) {
      const std::string why = lists.CheckWellFormed(static_cast<IntrusiveLists::ListId>(l));
      if (!why.empty()) return "list " + std::to_string(l) + ": " + why;
      std::vector<IntrusiveLists::NodeId> got;
      for (const auto n : lists.Nodes(static_cast<IntrusiveLists::ListId>(l))) got.push_back(n);
      if (got != model[l]) return "list " + std::to_string(l) + " differs from model";
    }
  }
  if (max_writes > 8) return "an operation wrote " + std::to_string(max_writes) + " fields";
  return "";
}

std::string ForestProperty() {
  constexpr std::size_t kNodes = 4096;
  constexpr int kOps = 100000;
  DisjointSetForest forest;
  std::vector<std::size_t> label(kNodes);
  for (std::size_t i = 0; i < kNodes; ++i) {
    forest.MakeNode();
    label[i] = i;
  }
  Rng rng(2);
  std::uniform_int_distribution<std::size_t> node(0, kNodes - 1);
  std::bernoulli_distribution merge(0.3);
  for (int i = 0; i < kOps; ++i) {
    const std::size_t x = node(rng), y = node(rng);
    if (merge(rng)) {
      forest.Merge(forest.FindRoot(static_cast<DisjointSetForest::Node>(x)),
                   forest.FindRoot(static_cast<DisjointSetForest::Node>(y)));
      const std::size_t from = label[y], to = label[x];
      for (auto& l : label) {
        if (l == from) l = to;
      }
    } else {
      const bool same = forest.FindRoot(static_cast<DisjointSetForest::Node>(x)) ==
                        forest.FindRoot(static_cast<DisjointSetForest::Node>(y));
      if (same != (label[x] == label[y])) return "find disagrees with model";
    }
    if (i % 1000 == 999) {
      const std::string why = forest.CheckInvariants();
      if (!why.empty()) return why;
    }
  }
  const std::string why = forest.CheckInvariants();
  if (!why.empty()) return why;
  if (!AmortizedBoundHolds(forest.traversals(), forest.operations(), forest.size())) {
    return "amortized bound exceeded";
  }
  return "";
}

void PropertySuites() {
  const std::string list_problem = ListProperty();
  const std::string forest_problem = ForestProperty();
  const bool ok = list_problem.empty() && forest_problem.empty() && tally.folded_failed == 0 &&
                  tally.generators_failed == 0 && tally.regenerations_failed == 0 &&
                  tally.regenerations_checked > 0;
  char detail[400];
  std::snprintf(detail, sizeof detail,
                "lists: %s; forest: %s; folded %zu/%zu; generators %zu/%zu; "
                "regenerated %zu/%zu",
                list_problem.empty() ? "ok" : list_problem.c_str(),
                forest_problem.empty() ? "ok" : forest_problem.c_str(),
                tally.folded_checked - tally.folded_failed, tally.folded_checked,
                tally.generators_checked - tally.generators_failed, tally.generators_checked,
                tally.regenerations_checked - tally.regenerations_failed,
                tally.regenerations_checked);
  Report(8, "structural properties", ok, detail);
}

}  // namespace
}  // namespace stallings

int main() {
  using namespace stallings;
  ExampleReproduction();
  OracleEquivalence();
  DerivedInstance();
  Scaling();
  AmortizedBound();
  MembershipLinearity();
  LogStarValues();
  PropertySuites();
  std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
