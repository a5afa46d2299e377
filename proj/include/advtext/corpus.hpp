// Copyright 2026 The advtext Authors
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
#ifndef ADVTEXT_CORPUS_HPP_
#define ADVTEXT_CORPUS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace advtext {

// A word of the ordered word list. `text` may be replaced by a mutation;
// the empty string marks a removed word.
struct WordToken {
  std::string text;
  std::size_t index = 0;
  std::string leading_space;  // whitespace between the previous element and this word

  bool operator==(const WordToken&) const = default;
};

enum class AttachSide { kBeforeWord, kAfterWord };

// A run of punctuation anchored to the word it follows (-1 when it precedes
// every word). Anchors glued to the next word with whitespace before them
// (opening quotes, brackets) are marked kBeforeWord.
struct PunctAnchor {
  std::string text;
  std::ptrdiff_t attach_word = -1;
  AttachSide attach_side = AttachSide::kAfterWord;
  std::string leading_space;

  bool operator==(const PunctAnchor&) const = default;
};

// A text decomposed into its word list and anchored punctuation list.
// Reinserting anchors and whitespace into the word list reproduces
// `original` byte for byte.
struct Corpus {
  std::vector<WordToken> words;
  std::vector<PunctAnchor> puncts;
  std::string trailing_space;
  std::string original;

  std::vector<std::string> word_texts() const;
};

// Splits text into words (maximal runs of letters, marks and digits, with
// apostrophes/hyphens kept when flanked by word characters), punctuation
// runs and whitespace. Never fails; ill-formed UTF-8 bytes become punctuation.
Corpus tokenize(std::string_view text);

// Renders the corpus back to text. Unmutated corpora yield `original`
// exactly. A removed word drops out together with one of the whitespace gaps
// around it; punctuation attached to it stays.
std::string detokenize(const Corpus& corpus);

}  // namespace advtext

#endif  // ADVTEXT_CORPUS_HPP_
