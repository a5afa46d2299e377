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
#include "advtext/mutation.hpp"

#include "advtext/error.hpp"
#include "advtext/unicode.hpp"

namespace advtext {

void CharMutationSpec::validate() const {
  if (replacement.empty()) return;
  const auto scalars = unicode::decode(replacement);
  if (scalars.size() != 1) {
    throw Error(ErrorKind::kConfig,
                "character replacement must be a single scalar or empty");
  }
  if (scalars.front().value == target) {
    throw Error(ErrorKind::kConfig,
                "character replacement equals the target character");
  }
}

void WordMutationSpec::validate() const {
  auto check = [](const std::string& r) {
    if (unicode::contains_space(r)) {
      throw Error(ErrorKind::kConfig,
                  "word replacement contains whitespace: '" + r + "'");
    }
  };
  for (const auto& [key, value] : replacements) check(value);
  if (fallback) check(*fallback);
}

std::string mutate_char(std::string_view word, const CharMutationSpec& spec) {
  const char32_t folded_target = unicode::to_lower(spec.target);
  std::string out;
  out.reserve(word.size() + 4);
  bool replaced = false;
  for (const auto& s : unicode::decode(word)) {
    const bool hit = unicode::to_lower(s.value) == folded_target &&
                     !(replaced && spec.policy == OccurrencePolicy::kFirst);
    if (hit) {
      out += spec.replacement;
      replaced = true;
    } else {
      out.append(word.substr(s.offset, s.length));
    }
  }
  return out;
}

Corpus mutate_word(Corpus corpus, const WordMutationSpec& spec) {
  for (auto& word : corpus.words) {
    if (word.text.empty()) continue;
    const std::string key = unicode::to_lower(word.text);
    const auto mapped = spec.replacements.find(key);
    const bool in_scope = spec.scope ? spec.scope->contains(word.text)
                                     : mapped != spec.replacements.end();
    if (!in_scope) continue;
    if (mapped != spec.replacements.end()) {
      word.text = mapped->second;
    } else if (spec.fallback) {
      word.text = *spec.fallback;
    }
  }
  return corpus;
}

Corpus apply_operator_set(Corpus corpus, const OperatorSet& op) {
  if (const auto* chars = std::get_if<CharMutationSpec>(&op.spec)) {
    for (auto& word : corpus.words) {
      if (!word.text.empty() && chars->scope.contains(word.text)) {
        word.text = mutate_char(word.text, *chars);
      }
    }
    return corpus;
  }
  return mutate_word(std::move(corpus), std::get<WordMutationSpec>(op.spec));
}

std::string mutate_text(std::string_view text, const OperatorSet& op) {
  return detokenize(apply_operator_set(tokenize(text), op));
}

OperatorSet make_preset(std::string_view id, const LexiconSet& lexicons) {
  auto unknown = [&] {
    std::string known;
    for (auto p : kPresetIds) {
      if (!known.empty()) known += ", ";
      known += p;
    }
    return Error(ErrorKind::kUnknownPreset, "unknown operator preset '" +
                                                std::string(id) +
                                                "'; valid presets: " + known);
  };
  if (id.size() < 3 || id[0] != 'm') throw unknown();

  const Lexicon* scope = nullptr;
  switch (id[2]) {
    case 'r': scope = &lexicons.articles; break;
    case 'j': scope = &lexicons.adjectives; break;
    case 'd': scope = &lexicons.adverbs; break;
    default: throw unknown();
  }

  if (id[1] == 'w' && id.size() == 3) {
    WordMutationSpec spec;
    spec.scope = *scope;
    spec.fallback = "";
    return {std::string(id), std::move(spec)};
  }
  if (id[1] == 'c' && id.size() == 5 && id[3] == '-') {
    CharMutationSpec spec;
    spec.scope = *scope;
    switch (id[4]) {
      case 'a':
        spec.target = U'a';
        spec.replacement = "α";  // U+03B1 GREEK SMALL LETTER ALPHA
        break;
      case 'e':
        spec.target = U'e';
        spec.replacement = "ε";  // U+03B5 GREEK SMALL LETTER EPSILON
        break;
      default:
        throw unknown();
    }
    return {std::string(id), std::move(spec)};
  }
  throw unknown();
}

std::optional<LabelFilter> parse_label_filter(std::string_view text) {
  if (text == "human") return LabelFilter::kHuman;
  if (text == "machine") return LabelFilter::kMachine;
  if (text == "all") return LabelFilter::kAll;
  return std::nullopt;
}

bool matches(LabelFilter filter, Label label) {
  switch (filter) {
    case LabelFilter::kAll: return true;
    case LabelFilter::kHuman: return label == Label::kHuman;
    case LabelFilter::kMachine: return label == Label::kMachine;
  }
  return false;
}

void mutate_sample(Sample& sample, const OperatorSet& op, LabelFilter filter) {
  if (!matches(filter, sample.label)) return;
  sample.text = mutate_text(sample.text, op);
  if (!sample.provenance.is_object()) {
    sample.provenance = nlohmann::ordered_json::object();
  }
  sample.provenance["op"] = op.id;
}

Dataset mutate_dataset(Dataset dataset, const OperatorSet& op,
                       LabelFilter filter) {
  for (auto& sample : dataset.samples) mutate_sample(sample, op, filter);
  return dataset;
}

}  // namespace advtext
