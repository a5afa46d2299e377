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
#ifndef ADVTEXT_MUTATION_HPP_
#define ADVTEXT_MUTATION_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "advtext/corpus.hpp"
#include "advtext/dataset.hpp"
#include "advtext/lexicon.hpp"

namespace advtext {

enum class OccurrencePolicy { kAll, kFirst };

// Character-level operator: swaps the target letter for a replacement glyph
// inside words of the scope lexicon. The target matches either case; the
// replacement is emitted verbatim. An empty replacement deletes the letter.
struct CharMutationSpec {
  char32_t target = U'a';
  std::string replacement;
  Lexicon scope;
  OccurrencePolicy policy = OccurrencePolicy::kAll;

  // Throws Error(kConfig) when replacement is the target letter itself or
  // more than one scalar.
  void validate() const;
};

// Word-level operator. A word is in scope when it belongs to `scope` or,
// with no scope lexicon, when it is a key of `replacements`. Scoped words
// take their mapped replacement (keys are lowercase), else `fallback`.
// An empty replacement removes the word.
struct WordMutationSpec {
  std::optional<Lexicon> scope;
  std::map<std::string, std::string> replacements;
  std::optional<std::string> fallback;

  // Throws Error(kConfig) when any replacement contains whitespace.
  void validate() const;
};

struct OperatorSet {
  std::string id;
  std::variant<CharMutationSpec, WordMutationSpec> spec;
};

// Stable CLI-facing preset ids: mwr mwj mwd mcr-a mcj-a mcd-a mcr-e mcj-e mcd-e.
// r = articles, j = adjectives, d = adverbs; w removes, c swaps a->α / e->ε.
inline constexpr std::array<std::string_view, 9> kPresetIds = {
    "mwr", "mwj", "mwd", "mcr-a", "mcj-a", "mcd-a", "mcr-e", "mcj-e", "mcd-e"};

// Throws Error(kUnknownPreset) naming the valid ids.
OperatorSet make_preset(std::string_view id, const LexiconSet& lexicons = {});

std::string mutate_char(std::string_view word, const CharMutationSpec& spec);
Corpus mutate_word(Corpus corpus, const WordMutationSpec& spec);
Corpus apply_operator_set(Corpus corpus, const OperatorSet& op);

// Convenience: tokenize, apply, detokenize.
std::string mutate_text(std::string_view text, const OperatorSet& op);

enum class LabelFilter { kHuman, kMachine, kAll };
std::optional<LabelFilter> parse_label_filter(std::string_view text);
bool matches(LabelFilter filter, Label label);

// Mutates one sample in place if it passes the filter; provenance records
// the operator id under "op".
void mutate_sample(Sample& sample, const OperatorSet& op, LabelFilter filter);
Dataset mutate_dataset(Dataset dataset, const OperatorSet& op,
                       LabelFilter filter);

}  // namespace advtext

#endif  // ADVTEXT_MUTATION_HPP_
