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
#include "advtext/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "advtext/error.hpp"

namespace advtext::unicode {

std::vector<Scalar> decode(std::string_view utf8) {
  std::vector<Scalar> out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({static_cast<char32_t>(c), static_cast<std::size_t>(start),
                   static_cast<std::size_t>(i - start)});
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    throw Error(ErrorKind::kFormat, "cannot encode code point as UTF-8");
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

std::string encode(char32_t cp) {
  std::string out;
  append_utf8(out, cp);
  return out;
}

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

CharClass classify(char32_t cp) {
  switch (cp) {
    case U'\'':
    case U'’':  // right single quotation mark, used as apostrophe
    case U'-':
    case U'‐':
    case U'‑':
      return CharClass::kJoiner;
    default:
      break;
  }
  const auto c = static_cast<UChar32>(cp);
  if (u_isUWhiteSpace(c)) return CharClass::kSpace;
  const int32_t mask = U_GET_GC_MASK(c);
  if (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_N_MASK)) return CharClass::kWord;
  return CharClass::kOther;
}

char32_t to_lower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

char32_t to_upper(char32_t cp) {
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp)));
}

namespace {

template <typename Map>
std::string map_scalars(std::string_view utf8, Map map) {
  std::string out;
  out.reserve(utf8.size());
  for (const Scalar& s : decode(utf8)) {
    const char32_t mapped = map(s.value);
    if (mapped == s.value) {
      out.append(utf8.substr(s.offset, s.length));
    } else {
      append_utf8(out, mapped);
    }
  }
  return out;
}

}  // namespace

std::string to_lower(std::string_view utf8) {
  return map_scalars(utf8, [](char32_t c) { return to_lower(c); });
}

std::string to_upper(std::string_view utf8) {
  return map_scalars(utf8, [](char32_t c) { return to_upper(c); });
}

bool contains_space(std::string_view utf8) {
  for (const Scalar& s : decode(utf8)) {
    if (is_space(s.value)) return true;
  }
  return false;
}

std::string trim(std::string_view utf8) {
  const auto scalars = decode(utf8);
  std::size_t first = 0;
  std::size_t last = scalars.size();
  while (first < last && is_space(scalars[first].value)) ++first;
  while (last > first && is_space(scalars[last - 1].value)) --last;
  if (first == last) return {};
  const std::size_t begin = scalars[first].offset;
  const std::size_t end = scalars[last - 1].offset + scalars[last - 1].length;
  return std::string(utf8.substr(begin, end - begin));
}

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::kConfig, "ICU NFC normalizer unavailable");
  }
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::kFormat, "NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::size_t scalar_count(std::string_view utf8) { return decode(utf8).size(); }

}  // namespace advtext::unicode
