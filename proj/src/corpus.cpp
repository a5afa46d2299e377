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
#include "advtext/corpus.hpp"

#include <optional>

#include "advtext/unicode.hpp"

namespace advtext {

namespace {

enum class Kind { kSpace, kWord, kPunct };

std::vector<Kind> scalar_kinds(const std::vector<unicode::Scalar>& scalars) {
  std::vector<unicode::CharClass> classes;
  classes.reserve(scalars.size());
  for (const auto& s : scalars) classes.push_back(unicode::classify(s.value));

  std::vector<Kind> kinds(scalars.size(), Kind::kPunct);
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    switch (classes[i]) {
      case unicode::CharClass::kSpace:
        kinds[i] = Kind::kSpace;
        break;
      case unicode::CharClass::kWord:
        kinds[i] = Kind::kWord;
        break;
      case unicode::CharClass::kJoiner: {
        const bool left = i > 0 && classes[i - 1] == unicode::CharClass::kWord;
        const bool right = i + 1 < scalars.size() &&
                           classes[i + 1] == unicode::CharClass::kWord;
        kinds[i] = (left && right) ? Kind::kWord : Kind::kPunct;
        break;
      }
      case unicode::CharClass::kOther:
        kinds[i] = Kind::kPunct;
        break;
    }
  }
  return kinds;
}

}  // namespace

std::vector<std::string> Corpus::word_texts() const {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.text);
  return out;
}

Corpus tokenize(std::string_view text) {
  Corpus corpus;
  corpus.original = std::string(text);

  const auto scalars = unicode::decode(text);
  const auto kinds = scalar_kinds(scalars);
  auto slice = [&](std::size_t first, std::size_t last) {
    const std::size_t begin = scalars[first].offset;
    const std::size_t end = scalars[last - 1].offset + scalars[last - 1].length;
    return std::string(text.substr(begin, end - begin));
  };

  std::string pending_space;
  bool any_element = false;
  std::size_t i = 0;
  while (i < scalars.size()) {
    std::size_t j = i + 1;
    while (j < scalars.size() && kinds[j] == kinds[i]) ++j;
    switch (kinds[i]) {
      case Kind::kSpace:
        pending_space = slice(i, j);
        break;
      case Kind::kWord:
        corpus.words.push_back(
            {slice(i, j), corpus.words.size(), std::move(pending_space)});
        pending_space.clear();
        any_element = true;
        break;
      case Kind::kPunct: {
        const bool opens = (!any_element || !pending_space.empty()) &&
                           j < scalars.size() && kinds[j] == Kind::kWord;
        corpus.puncts.push_back(
            {slice(i, j), static_cast<std::ptrdiff_t>(corpus.words.size()) - 1,
             opens ? AttachSide::kBeforeWord : AttachSide::kAfterWord,
             std::move(pending_space)});
        pending_space.clear();
        any_element = true;
        break;
      }
    }
    i = j;
  }
  corpus.trailing_space = std::move(pending_space);
  return corpus;
}

std::string detokenize(const Corpus& corpus) {
  std::string out;
  out.reserve(corpus.original.size() + 16);

  bool emitted = false;
  // Gap left behind by one or more removed words, waiting for the next
  // surviving element.
  std::optional<std::string> carry;

  auto emit = [&](const std::string& leading, const std::string& text) {
    if (text.empty()) {
      if (!carry || (emitted && carry->empty())) carry = leading;
      return;
    }
    if (!carry) {
      out += leading;
    } else if (!emitted) {
      out += *carry;
    } else if (!leading.empty()) {
      out += carry->empty() ? leading : *carry;
    }
    carry.reset();
    out += text;
    emitted = true;
  };

  std::size_t p = 0;
  const auto& puncts = corpus.puncts;
  auto flush_puncts = [&](std::ptrdiff_t attach) {
    while (p < puncts.size() && puncts[p].attach_word == attach) {
      emit(puncts[p].leading_space, puncts[p].text);
      ++p;
    }
  };

  flush_puncts(-1);
  for (std::size_t w = 0; w < corpus.words.size(); ++w) {
    emit(corpus.words[w].leading_space, corpus.words[w].text);
    flush_puncts(static_cast<std::ptrdiff_t>(w));
  }
  // Anchors pointing past the word list (malformed input) still render.
  while (p < puncts.size()) {
    emit(puncts[p].leading_space, puncts[p].text);
    ++p;
  }
  out += corpus.trailing_space;
  return out;
}

}  // namespace advtext
