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

#ifndef STALLINGS_IO_H_
#define STALLINGS_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stallings/folded_graph.h"
#include "stallings/word.h"

namespace stallings {

// Problem with a generator file. line() is 1-based, or 0 for file-level
// problems such as an unreadable path or an empty generator list.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GeneratorSet {
  Alphabet alphabet{1};
  std::vector<Word> words;  // freely reduced, in file order
};

// Generator file syntax:
//   # comment
//   alphabet: abc      optional, must precede the first word; rank = highest letter
//   abba               one word per non-empty line ("1" is the empty word)
// Without a directive the rank is the highest generator used. A file with no
// words and no directive is rejected ("no generators").
GeneratorSet ParseGeneratorText(std::string_view text);
GeneratorSet ReadGeneratorFile(const std::string& path);

enum class OutputFormat { kText, kJson, kDot };

// Throws std::invalid_argument for anything but "text", "json" or "dot".
OutputFormat ParseOutputFormat(std::string_view name);

// Serializes `f` exactly as given (callers canonicalize first for
// deterministic numbering).
//   text: "vertices: V\nbase: B\n" then one "from label to" line per edge
//   json: {"alphabet":n,"base":B,"vertices":V,"edges":[[from,"x",to],...]}
//   dot:  digraph with the base drawn as a double circle
std::string FormatFoldedGraph(const FoldedGraph& f, OutputFormat format);

// Reads the json form back. Throws std::invalid_argument on schema errors.
FoldedGraph ParseFoldedGraphJson(std::string_view json);

}  // namespace stallings

#endif  // STALLINGS_IO_H_
