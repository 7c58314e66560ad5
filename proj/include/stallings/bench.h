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

#ifndef STALLINGS_BENCH_H_
#define STALLINGS_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stallings/word.h"

namespace stallings {

// Least k such that k applications of log2 bring n to at most 1.
// Throws std::domain_error for n == 0.
unsigned LogStar(std::uint64_t n);

// log*(2^k) for exponents too large to materialize, via log*(2^k) = log*(k) + 1.
unsigned LogStarPow2(std::uint64_t k);

// Constant of the measured amortized bound
// traversals <= C * (operations + nodes) * (log*(nodes) + 1).
inline constexpr std::uint64_t kAmortizedConstant = 10;
bool AmortizedBoundHolds(std::uint64_t traversals, std::uint64_t operations,
                         std::uint64_t nodes);

using Rng = std::mt19937_64;

// Uniform random reduced word: the first letter is uniform over the 2*rank
// signed letters, each later one uniform over the 2*rank-1 letters that do
// not cancel its predecessor.
Word RandomReducedWord(std::size_t length, int rank, Rng& rng);

struct InstanceConfig {
  int min_rank = 1;
  int max_rank = 4;
  std::size_t min_generators = 1;
  std::size_t max_generators = 6;
  std::size_t min_length = 1;
  std::size_t max_length = 30;
};

struct Instance {
  Alphabet alphabet{1};
  std::vector<Word> words;
  std::size_t total_letters() const;
};

Instance RandomInstance(const InstanceConfig& config, Rng& rng);

// Independent per-trial seed derived from a campaign seed (splitmix64).
std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial);

struct OracleReport {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<std::uint64_t> failing_seeds;
  bool ok() const { return passes == trials; }
};

// For each trial: random instance from TrialSeed(seed, trial), fold it both
// with Fold and NaiveFold, compare canonical forms.
OracleReport VerifyAgainstOracle(std::size_t trials, const InstanceConfig& config,
                                 std::uint64_t seed);

// Rank-2 instance of exactly `total_letters` letters, split into random
// reduced words of length 1..32.
Instance ScalingInstance(std::size_t total_letters, Rng& rng);

struct ScalingRow {
  std::size_t n = 0;
  // Thread CPU time of bouquet construction + fold: fastest of five runs
  // per instance, median over instances.
  double time_ns = 0;
  double ns_per_n = 0;
  double ns_per_n_logstar = 0;  // time / (N * (log*N + 1))
  std::uint64_t dsf_traversals = 0;  // maximum over instances
  std::uint64_t dsf_operations = 0;  // at the repetition with most traversals
  std::uint64_t dsf_nodes = 0;
  bool bound_holds = true;  // amortized bound on every repetition
};

// `sizes` must be ascending. Every size gets `reps` seeded instances.
std::vector<ScalingRow> RunScaling(const std::vector<std::size_t>& sizes,
                                   std::size_t reps, std::uint64_t seed);

// Header "N\ttime_ns\tns_per_N\tns_per_NlogstarN\tdsf_traversals".
std::string FormatScalingTsv(const std::vector<ScalingRow>& rows);

}  // namespace stallings

#endif  // STALLINGS_BENCH_H_
