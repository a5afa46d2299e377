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
#ifndef ADVTEXT_LEXICON_HPP_
#define ADVTEXT_LEXICON_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace advtext {

// A named word-class list. Entries are lowercase, trimmed, whitespace-free.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::string name, std::set<std::string> entries, std::string source);

  // Parses the lexicon file format: one word per line, '#' starts a comment
  // line, blank lines are ignored. Throws Error(kFormat) for an entry that
  // contains whitespace; `origin` is used in messages and as `source`.
  static Lexicon parse(std::string name, std::string_view contents,
                       std::string origin);

  const std::string& name() const { return name_; }
  const std::set<std::string>& entries() const { return entries_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return entries_.size(); }

  // Case-insensitive membership.
  bool contains(std::string_view word) const;

  bool operator==(const Lexicon&) const = default;

 private:
  std::string name_;
  std::set<std::string> entries_;
  std::string source_;
};

// Throws Error(kIo) if the file cannot be read.
Lexicon load_lexicon(const std::filesystem::path& path);

// Lists compiled into the library; source() == "builtin".
const Lexicon& builtin_articles();
const Lexicon& builtin_adjectives();
const Lexicon& builtin_adverbs();

// The three word classes operator presets are scoped to.
struct LexiconSet {
  Lexicon articles = builtin_articles();
  Lexicon adjectives = builtin_adjectives();
  Lexicon adverbs = builtin_adverbs();
};

}  // namespace advtext

#endif  // ADVTEXT_LEXICON_HPP_
