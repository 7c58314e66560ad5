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

#include "stallings/cli.h"

#include <fstream>

#include "CLI11.hpp"
#include "stallings/bench.h"
#include "stallings/canonical.h"
#include "stallings/folding.h"
#include "stallings/subgroup.h"

namespace stallings {
namespace {

std::vector<std::size_t> ParseSizes(const std::string& csv) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string item = csv.substr(start, comma - start);
    std::size_t used = 0;
    const unsigned long long value = std::stoull(item, &used);
    if (used != item.size() || value == 0) {
      throw std::invalid_argument("bad size '" + item + "'");
    }
    sizes.push_back(static_cast<std::size_t>(value));
    start = comma + 1;
  }
  return sizes;
}

void WriteWords(const std::vector<Word>& words, std::ostream& out) {
  for (const Word& w : words) out << FormatWord(w) << '\n';
}

}  // namespace

int Run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.command == Command::kBench) {
    out << FormatScalingTsv(RunScaling(job.sizes, job.trials, job.seed));
    return kExitOk;
  }

  GeneratorSet input;
  Word query;
  try {
    input = ReadGeneratorFile(job.input);
    if (job.command == Command::kMember) {
      if (!job.word) {
        err << "error: member requires --word\n";
        return kExitUsage;
      }
      query = ParseWord(*job.word, input.alphabet);
    }
  } catch (const InputError& e) {
    err << "error: " << job.input << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: --word: " << e.what() << '\n';
    return kExitParse;
  }

  LabeledGraph g = BuildBouquet(input.words, input.alphabet);
  const FoldResult result = Fold(g);
  const FoldedGraph folded = Canonicalize(result.graph);

  switch (job.command) {
    case Command::kFold: {
      if (job.trace) {
        std::ofstream trace(*job.trace, std::ios::binary);
        trace << FormatTrace(result.trace);
        if (!trace) {
          err << "error: cannot write trace to " << *job.trace << '\n';
          return kExitRuntime;
        }
      }
      out << FormatFoldedGraph(folded, job.format);
      return kExitOk;
    }
    case Command::kMember: {
      const bool member = IsMember(folded, query);
      out << (member ? "true" : "false") << '\n';
      return member ? kExitOk : kExitNotMember;
    }
    case Command::kIndex:
      out << Index(folded).ToString() << '\n';
      return kExitOk;
    case Command::kBasis:
      WriteWords(NielsenBasis(folded), out);
      return kExitOk;
    case Command::kTransversal:
      if (!Index(folded).IsFinite()) {
        err << "warning: the index is infinite; these words label the vertices of "
               "the core graph, not a full transversal\n";
      }
      WriteWords(SchreierTransversal(folded), out);
      return kExitOk;
    case Command::kBench:
      break;
  }
  return kExitOk;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stallings folding of finitely generated subgroups of free groups"};
  app.require_subcommand(1);

  JobSpec job;
  std::string format = "text";
  std::string sizes;
  std::string word;
  std::string trace;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", job.input, "Generator file")->required();
  };
  CLI::App* fold = app.add_subcommand("fold", "Fold the generators and print the graph");
  add_input(fold);
  fold->add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  fold->add_option("--trace", trace, "Write the folding trace to FILE");
  CLI::App* member = app.add_subcommand("member", "Decide membership of --word");
  add_input(member);
  member->add_option("--word", word, "Query word")->required();
  add_input(app.add_subcommand("index", "Print the index, or 'infinite'"));
  add_input(app.add_subcommand("basis", "Print a Nielsen basis"));
  add_input(app.add_subcommand("transversal", "Print a Schreier transversal"));
  CLI::App* bench = app.add_subcommand("bench", "Scaling benchmark (TSV)");
  bench->add_option("--seed", job.seed, "Random seed");
  bench->add_option("--sizes", sizes, "Comma-separated instance sizes N");
  bench->add_option("--trials", job.trials, "Repetitions per size")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (!sizes.empty()) {
      try {
        job.sizes = ParseSizes(sizes);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--sizes", "expected a comma-separated list of positive integers");
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (fold->parsed()) job.command = Command::kFold;
  if (member->parsed()) job.command = Command::kMember;
  if (app.got_subcommand("index")) job.command = Command::kIndex;
  if (app.got_subcommand("basis")) job.command = Command::kBasis;
  if (app.got_subcommand("transversal")) job.command = Command::kTransversal;
  if (bench->parsed()) job.command = Command::kBench;
  job.format = ParseOutputFormat(format);
  if (!word.empty()) job.word = word;
  if (!trace.empty()) job.trace = trace;

  try {
    return Run(job, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace stallings
