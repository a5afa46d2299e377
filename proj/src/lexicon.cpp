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
#include "advtext/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "advtext/error.hpp"
#include "advtext/unicode.hpp"

namespace advtext {

namespace detail {
extern const std::string_view kArticlesText;
extern const std::string_view kAdjectivesText;
extern const std::string_view kAdverbsText;
}  // namespace detail

Lexicon::Lexicon(std::string name, std::set<std::string> entries,
                 std::string source)
    : name_(std::move(name)), source_(std::move(source)) {
  for (const auto& e : entries) {
    const std::string normalized = unicode::to_lower(unicode::trim(e));
    if (normalized.empty()) continue;
    if (unicode::contains_space(normalized)) {
      throw Error(ErrorKind::kFormat,
                  "lexicon entry contains whitespace: '" + e + "'");
    }
    entries_.insert(normalized);
  }
}

Lexicon Lexicon::parse(std::string name, std::string_view contents,
                       std::string origin) {
  std::set<std::string> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    ++line_no;
    const std::string line = unicode::trim(contents.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (unicode::contains_space(line)) {
      throw Error(ErrorKind::kFormat, origin + ":" + std::to_string(line_no) +
                                          ": entry must be a single word: '" +
                                          line + "'");
    }
    entries.insert(unicode::to_lower(line));
  }
  return Lexicon(std::move(name), std::move(entries), std::move(origin));
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.count(unicode::to_lower(word)) != 0;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot read lexicon file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorKind::kIo, "error reading lexicon file " + path.string());
  }
  return Lexicon::parse(path.stem().string(), buffer.str(), path.string());
}

const Lexicon& builtin_articles() {
  static const Lexicon lexicon =
      Lexicon::parse("articles", detail::kArticlesText, "builtin");
  return lexicon;
}

const Lexicon& builtin_adjectives() {
  static const Lexicon lexicon =
      Lexicon::parse("adjectives", detail::kAdjectivesText, "builtin");
  return lexicon;
}

const Lexicon& builtin_adverbs() {
  static const Lexicon lexicon =
      Lexicon::parse("adverbs", detail::kAdverbsText, "builtin");
  return lexicon;
}

}  // namespace advtext
