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

#include <gtest/gtest.h>

#include "stallings/bench.h"
#include "stallings/canonical.h"
#include "stallings/folding.h"
#include "test_util.h"

namespace stallings {
namespace {

using testing::Words;

std::size_t ErrorLine(std::string_view text) {
  try {
    ParseGeneratorText(text);
  } catch (const InputError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for: " << text;
  return 999;
}

TEST(ParseGeneratorTextTest, WordsCommentsAndRank) {
  const GeneratorSet set = ParseGeneratorText("# example\nabba\n\n  Aba \naaa\n");
  EXPECT_EQ(set.alphabet.rank(), 2);
  EXPECT_EQ(set.words, Words({"abba", "Aba", "aaa"}, 2));
}

TEST(ParseGeneratorTextTest, WordsAreReduced) {
  EXPECT_EQ(ParseGeneratorText("abBa\n").words, Words({"aa"}, 1));
}

TEST(ParseGeneratorTextTest, AlphabetDirective) {
  const GeneratorSet set = ParseGeneratorText("alphabet: abc\na\n1\n");
  EXPECT_EQ(set.alphabet.rank(), 3);
  EXPECT_EQ(set.words.size(), 2u);
  EXPECT_TRUE(set.words[1].empty());
  EXPECT_EQ(ParseGeneratorText("alphabet: ab\n").words.size(), 0u);
}

TEST(ParseGeneratorTextTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ErrorLine("ab\nab3\n"), 2u);
  EXPECT_EQ(ErrorLine("# c\n\nalphabet: a\nab\n"), 4u);
  EXPECT_EQ(ErrorLine("a\nalphabet: ab\n"), 2u);
  EXPECT_EQ(ErrorLine("alphabet: aB\n"), 1u);
  EXPECT_EQ(ErrorLine("alphabet:\n"), 1u);
  EXPECT_EQ(ErrorLine(""), 0u);
  EXPECT_EQ(ErrorLine("# only comments\n1\n"), 0u);
}

TEST(ReadGeneratorFileTest, MissingFile) {
  try {
    ReadGeneratorFile("/nonexistent/generators.txt");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 0u);
  }
}

TEST(ParseOutputFormatTest, Names) {
  EXPECT_EQ(ParseOutputFormat("text"), OutputFormat::kText);
  EXPECT_EQ(ParseOutputFormat("json"), OutputFormat::kJson);
  EXPECT_EQ(ParseOutputFormat("dot"), OutputFormat::kDot);
  EXPECT_THROW(ParseOutputFormat("xml"), std::invalid_argument);
}

FoldedGraph IndexTwo() {
  return Canonicalize(FoldWords(Words({"aa", "b", "abA"}, 2), Alphabet(2)).graph);
}

TEST(FormatFoldedGraphTest, Text) {
  EXPECT_EQ(FormatFoldedGraph(IndexTwo(), OutputFormat::kText),
            "vertices: 2\nbase: 0\n0 a 1\n0 b 0\n1 a 0\n1 b 1\n");
}

TEST(FormatFoldedGraphTest, Json) {
  EXPECT_EQ(FormatFoldedGraph(IndexTwo(), OutputFormat::kJson),
            "{\"alphabet\":2,\"base\":0,\"vertices\":2,\"edges\":"
            "[[0,\"a\",1],[0,\"b\",0],[1,\"a\",0],[1,\"b\",1]]}\n");
}

TEST(FormatFoldedGraphTest, Dot) {
  EXPECT_EQ(FormatFoldedGraph(IndexTwo(), OutputFormat::kDot),
            "digraph folded {\n"
            "  0 [shape=doublecircle];\n"
            "  1 [shape=circle];\n"
            "  0 -> 1 [label=\"a\"];\n"
            "  0 -> 0 [label=\"b\"];\n"
            "  1 -> 0 [label=\"a\"];\n"
            "  1 -> 1 [label=\"b\"];\n"
            "}\n");
}

TEST(ParseFoldedGraphJsonTest, RoundTrip) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = RandomInstance(InstanceConfig{}, rng);
    const FoldedGraph f = Canonicalize(FoldWords(inst.words, inst.alphabet).graph);
    EXPECT_EQ(ParseFoldedGraphJson(FormatFoldedGraph(f, OutputFormat::kJson)), f);
  }
}

TEST(ParseFoldedGraphJsonTest, Malformed) {
  EXPECT_THROW(ParseFoldedGraphJson("{"), std::invalid_argument);
  EXPECT_THROW(ParseFoldedGraphJson("{\"alphabet\":1}"), std::invalid_argument);
  EXPECT_THROW(ParseFoldedGraphJson(
                   "{\"alphabet\":1,\"base\":0,\"vertices\":1,\"edges\":[[0,\"A\",0]]}"),
               std::invalid_argument);
}

}  // namespace
}  // namespace stallings
