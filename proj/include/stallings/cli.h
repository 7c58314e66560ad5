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

#ifndef STALLINGS_CLI_H_
#define STALLINGS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stallings/io.h"

namespace stallings {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotMember = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitRuntime = 4;

enum class Command { kFold, kMember, kIndex, kBasis, kTransversal, kBench };

struct JobSpec {
  Command command = Command::kFold;
  std::string input;
  std::optional<std::string> word;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> trace;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes = {1u << 16, 1u << 17, 1u << 18, 1u << 19, 1u << 20};
  std::size_t trials = 5;
};

// Executes a validated job. Normal output goes to `out`, diagnostics to
// `err`; the return value is the exit code.
int Run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Parses the command line into a JobSpec and runs it.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stallings

#endif  // STALLINGS_CLI_H_
