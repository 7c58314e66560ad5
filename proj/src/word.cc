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

#include "stallings/word.h"

#include <string>

namespace stallings {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxAlphabetRank) {
    throw std::invalid_argument("alphabet rank must be in 1..26, got " +
                                std::to_string(rank));
  }
}

void Word::Append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

bool Word::IsReduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].Inverse()) return false;
  }
  return true;
}

Word ParseWord(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  if (text == "1") return Word();
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    Letter l;
    if (c >= 'a' && c <= 'z') {
      l = {static_cast<Generator>(c - 'a'), false};
    } else if (c >= 'A' && c <= 'Z') {
      l = {static_cast<Generator>(c - 'A'), true};
    } else {
      throw ParseError(std::string("invalid character '") + c +
                           "' at position " + std::to_string(i),
                       i);
    }
    if (!alphabet.Contains(l.generator)) {
      throw ParseError(std::string("letter '") + c + "' at position " +
                           std::to_string(i) + " is outside an alphabet of rank " +
                           std::to_string(alphabet.rank()),
                       i);
    }
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

Word FreeReduce(const Word& w) {
  // Stack reduction: one pass, each letter pushed and popped at most once.
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.Inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word InvertWord(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->Inverse());
  }
  return Word(std::move(out));
}

char GeneratorSymbol(Generator g) {
  if (g >= static_cast<Generator>(kMaxAlphabetRank)) {
    throw std::out_of_range("generator index " + std::to_string(g) +
                            " has no letter");
  }
  return static_cast<char>('a' + g);
}

char LetterSymbol(Letter l) {
  const char c = GeneratorSymbol(l.generator);
  return l.inverted ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string FormatWord(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(LetterSymbol(l));
  return out;
}

}  // namespace stallings
