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

#ifndef STALLINGS_WORD_H_
#define STALLINGS_WORD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

// Zero-based generator index: 0 is x1 (written 'a'), 1 is x2 ('b'), ...
using Generator = std::uint32_t;

inline constexpr int kMaxAlphabetRank = 26;

// The free basis x1..xn of F(X).
class Alphabet {
 public:
  // Throws std::invalid_argument unless 1 <= rank <= 26.
  explicit Alphabet(int rank);

  int rank() const { return rank_; }
  bool Contains(Generator g) const { return g < static_cast<Generator>(rank_); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

struct Letter {
  Generator generator = 0;
  bool inverted = false;

  Letter Inverse() const { return {generator, !inverted}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A finite sequence of letters in X^{+-1}. Not necessarily reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void Append(const Word& other);

  bool IsReduced() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Thrown by ParseWord; position is the zero-based offset of the bad character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Lowercase letters are generators, uppercase their inverses. "1" is the
// empty word. The result is returned as written, without reduction.
Word ParseWord(std::string_view text, const Alphabet& alphabet);

Word FreeReduce(const Word& w);
Word InvertWord(const Word& w);

// Inverse of ParseWord. The empty word renders as "1". Throws
// std::out_of_range for generators past 'z'.
std::string FormatWord(const Word& w);

char LetterSymbol(Letter l);
char GeneratorSymbol(Generator g);

}  // namespace stallings

#endif  // STALLINGS_WORD_H_
