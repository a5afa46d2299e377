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
#ifndef ADVTEXT_UNICODE_HPP_
#define ADVTEXT_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace advtext::unicode {

enum class CharClass { kWord, kSpace, kJoiner, kOther };

// One decoded scalar with the byte span it occupies in the source string.
// Ill-formed bytes decode to U+FFFD but keep their original span.
struct Scalar {
  char32_t value;
  std::size_t offset;
  std::size_t length;
};

std::vector<Scalar> decode(std::string_view utf8);
void append_utf8(std::string& out, char32_t cp);
std::string encode(char32_t cp);

// Word characters are letters, marks and numbers. Joiners (apostrophes and
// hyphens) only belong to a word when flanked by word characters.
CharClass classify(char32_t cp);
bool is_space(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
std::string to_lower(std::string_view utf8);
std::string to_upper(std::string_view utf8);

bool contains_space(std::string_view utf8);
std::string trim(std::string_view utf8);
std::string nfc(std::string_view utf8);

std::size_t scalar_count(std::string_view utf8);

}  // namespace advtext::unicode

#endif  // ADVTEXT_UNICODE_HPP_
