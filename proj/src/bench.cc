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

#include "stallings/bench.h"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <limits>
#include <stdexcept>

#include "stallings/canonical.h"
#include "stallings/folding.h"
#include "stallings/naive_fold.h"

namespace stallings {

unsigned LogStar(std::uint64_t n) {
  if (n == 0) throw std::domain_error("log* is undefined at 0");
  // log*(n) is the least k with n <= T(k), where T(0) = 1, T(k+1) = 2^T(k).
  // T(5) = 2^65536 exceeds every 64-bit value.
  constexpr std::uint64_t kTower[] = {1, 2, 4, 16, 65536};
  for (unsigned k = 0; k < 5; ++k) {
    if (n <= kTower[k]) return k;
  }
  return 5;
}

unsigned LogStarPow2(std::uint64_t k) {
  // log*(2^0) = log*(1) = 0.
  if (k == 0) return 0;
  return LogStar(k) + 1;
}

bool AmortizedBoundHolds(std::uint64_t traversals, std::uint64_t operations,
                         std::uint64_t nodes) {
  const std::uint64_t log_star = nodes == 0 ? 0 : LogStar(nodes);
  return traversals <= kAmortizedConstant * (operations + nodes) * (log_star + 1);
}

Word RandomReducedWord(std::size_t length, int rank, Rng& rng) {
  // Signed letter index: 2*g for x_g, 2*g+1 for its inverse.
  const unsigned letters = 2 * static_cast<unsigned>(rank);
  Word w;
  unsigned forbidden = letters;  // none
  for (std::size_t i = 0; i < length; ++i) {
    unsigned pick;
    if (forbidden == letters) {
      pick = std::uniform_int_distribution<unsigned>(0, letters - 1)(rng);
    } else {
      pick = std::uniform_int_distribution<unsigned>(0, letters - 2)(rng);
      if (pick >= forbidden) ++pick;
    }
    const Letter l{pick / 2, (pick & 1) != 0};
    w.push_back(l);
    forbidden = pick ^ 1;
  }
  return w;
}

std::size_t Instance::total_letters() const {
  std::size_t n = 0;
  for (const Word& w : words) n += w.size();
  return n;
}

Instance RandomInstance(const InstanceConfig& config, Rng& rng) {
  const int rank = std::uniform_int_distribution<int>(config.min_rank, config.max_rank)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(
      config.min_generators, config.max_generators)(rng);
  Instance inst;
  inst.alphabet = Alphabet(rank);
  std::uniform_int_distribution<std::size_t> length(config.min_length, config.max_length);
  for (std::size_t i = 0; i < m; ++i) {
    inst.words.push_back(RandomReducedWord(length(rng), rank, rng));
  }
  return inst;
}

std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

OracleReport VerifyAgainstOracle(std::size_t trials, const InstanceConfig& config,
                                 std::uint64_t seed) {
  OracleReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = TrialSeed(seed, t);
    Rng rng(trial_seed);
    const Instance inst = RandomInstance(config, rng);
    LabeledGraph g = BuildBouquet(inst.words, inst.alphabet);
    const FoldedGraph expected = NaiveFold(g);
    const FoldResult got = Fold(g);
    if (CanonicalForm(got.graph) == CanonicalForm(expected)) {
      ++report.passes;
    } else {
      report.failing_seeds.push_back(trial_seed);
    }
  }
  return report;
}

Instance ScalingInstance(std::size_t total_letters, Rng& rng) {
  constexpr std::size_t kMaxWordLength = 32;
  Instance inst;
  inst.alphabet = Alphabet(2);
  std::uniform_int_distribution<std::size_t> length(1, kMaxWordLength);
  std::size_t remaining = total_letters;
  while (remaining > 0) {
    const std::size_t len = std::min(remaining, length(rng));
    inst.words.push_back(RandomReducedWord(len, 2, rng));
    remaining -= len;
  }
  return inst;
}

namespace {

// Each instance is timed this many times and its fastest run kept.
constexpr int kTimingsPerInstance = 5;

// CPU time of the calling thread; time spent descheduled is not counted.
double ThreadCpuNanos() {
  timespec ts;
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e9 + static_cast<double>(ts.tv_nsec);
}

}  // namespace

std::vector<ScalingRow> RunScaling(const std::vector<std::size_t>& sizes,
                                   std::size_t reps, std::uint64_t seed) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw std::invalid_argument("scaling sizes must be ascending");
  }
  const std::size_t instances = std::max<std::size_t>(reps, 1);
  std::vector<ScalingRow> rows(sizes.size());
  // best[i][r]: fastest timing of instance r of size i.
  std::vector<std::vector<double>> best(
      sizes.size(), std::vector<double>(instances, std::numeric_limits<double>::infinity()));
  // Rounds sweep all sizes so slow phases of the host hit every size alike.
  for (int round = 0; round < kTimingsPerInstance; ++round) {
    for (std::size_t r = 0; r < instances; ++r) {
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const std::size_t n = sizes[i];
        Rng rng(TrialSeed(seed ^ n, r));
        const Instance inst = ScalingInstance(n, rng);
        const double start = ThreadCpuNanos();
        LabeledGraph g = BuildBouquet(inst.words, inst.alphabet);
        const FoldResult result = Fold(g);
        best[i][r] = std::min(best[i][r], ThreadCpuNanos() - start);
        if (round > 0) continue;
        ScalingRow& row = rows[i];
        const FoldStats& s = result.stats;
        if (s.dsf_traversals >= row.dsf_traversals) {
          row.dsf_traversals = s.dsf_traversals;
          row.dsf_operations = s.dsf_operations;
          row.dsf_nodes = s.dsf_nodes;
        }
        row.bound_holds = row.bound_holds &&
                          AmortizedBoundHolds(s.dsf_traversals, s.dsf_operations, s.dsf_nodes);
      }
    }
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ScalingRow& row = rows[i];
    const std::size_t n = sizes[i];
    std::vector<double>& times = best[i];
    std::sort(times.begin(), times.end());
    row.n = n;
    row.time_ns = times[times.size() / 2];
    row.ns_per_n = n == 0 ? 0 : row.time_ns / static_cast<double>(n);
    row.ns_per_n_logstar =
        n == 0 ? 0 : row.time_ns / (static_cast<double>(n) * (LogStar(n) + 1));
  }
  return rows;
}

std::string FormatScalingTsv(const std::vector<ScalingRow>& rows) {
  std::string out = "N\ttime_ns\tns_per_N\tns_per_NlogstarN\tdsf_traversals\n";
  char buf[160];
  for (const ScalingRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu\t%.0f\t%.3f\t%.3f\t%llu\n", r.n, r.time_ns,
                  r.ns_per_n, r.ns_per_n_logstar,
                  static_cast<unsigned long long>(r.dsf_traversals));
    out += buf;
  }
  return out;
}

}  // namespace stallings
