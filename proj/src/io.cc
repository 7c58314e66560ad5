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

#include "stallings/io.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace stallings {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

constexpr std::string_view kAlphabetDirective = "alphabet:";

}  // namespace

GeneratorSet ParseGeneratorText(std::string_view text) {
  const Alphabet widest(kMaxAlphabetRank);
  std::optional<Alphabet> declared;
  std::vector<Word> words;
  int highest = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.substr(0, kAlphabetDirective.size()) == kAlphabetDirective) {
      if (declared || !words.empty()) {
        throw InputError("line " + std::to_string(line_no) +
                             ": alphabet directive must come first and only once",
                         line_no);
      }
      const std::string_view letters = Trim(line.substr(kAlphabetDirective.size()));
      if (letters.empty()) {
        throw InputError("line " + std::to_string(line_no) + ": empty alphabet", line_no);
      }
      int rank = 0;
      for (const char c : letters) {
        if (c < 'a' || c > 'z') {
          throw InputError("line " + std::to_string(line_no) +
                               ": alphabet letters must be lowercase, got '" + c + "'",
                           line_no);
        }
        rank = std::max(rank, c - 'a' + 1);
      }
      declared = Alphabet(rank);
      continue;
    }

    try {
      Word w = ParseWord(line, declared ? *declared : widest);
      for (const Letter& l : w) highest = std::max(highest, static_cast<int>(l.generator) + 1);
      words.push_back(FreeReduce(w));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  if (!declared && highest == 0) {
    throw InputError("no generators", 0);
  }
  GeneratorSet set;
  set.alphabet = declared ? *declared : Alphabet(highest);
  set.words = std::move(words);
  return set;
}

GeneratorSet ReadGeneratorFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGeneratorText(buf.str());
}

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "dot") return OutputFormat::kDot;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string FormatFoldedGraph(const FoldedGraph& f, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kText:
      out << "vertices: " << f.vertex_count << '\n' << "base: " << f.base << '\n';
      for (const FoldedEdge& e : f.edges) {
        out << e.from << ' ' << GeneratorSymbol(e.label) << ' ' << e.to << '\n';
      }
      break;
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["alphabet"] = f.alphabet.rank();
      j["base"] = f.base;
      j["vertices"] = f.vertex_count;
      j["edges"] = nlohmann::ordered_json::array();
      for (const FoldedEdge& e : f.edges) {
        j["edges"].push_back({e.from, std::string(1, GeneratorSymbol(e.label)), e.to});
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kDot:
      out << "digraph folded {\n";
      for (std::uint32_t v = 0; v < f.vertex_count; ++v) {
        out << "  " << v << " [shape=" << (v == f.base ? "doublecircle" : "circle")
            << "];\n";
      }
      for (const FoldedEdge& e : f.edges) {
        out << "  " << e.from << " -> " << e.to << " [label=\""
            << GeneratorSymbol(e.label) << "\"];\n";
      }
      out << "}\n";
      break;
  }
  return out.str();
}

FoldedGraph ParseFoldedGraphJson(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    FoldedGraph f;
    f.alphabet = Alphabet(j.at("alphabet").get<int>());
    f.base = j.at("base").get<std::uint32_t>();
    f.vertex_count = j.at("vertices").get<std::uint32_t>();
    for (const auto& e : j.at("edges")) {
      const auto label = e.at(1).get<std::string>();
      if (label.size() != 1 || label[0] < 'a' || label[0] > 'z') {
        throw std::invalid_argument("bad edge label '" + label + "'");
      }
      f.edges.push_back({e.at(0).get<std::uint32_t>(),
                         static_cast<Generator>(label[0] - 'a'),
                         e.at(2).get<std::uint32_t>()});
    }
    std::sort(f.edges.begin(), f.edges.end());
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed folded-graph json: ") + e.what());
  }
}

}  // namespace stallings
