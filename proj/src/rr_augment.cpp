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
#include "advtext/rr_augment.hpp"

#include <charconv>

#include "advtext/error.hpp"

namespace advtext {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::kConfig,
                "invalid ratio '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  Ratio ratio;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    ratio.num = parse_u64(text.substr(0, slash), text);
    ratio.den = parse_u64(text.substr(slash + 1), text);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) {
      throw Error(ErrorKind::kConfig, "too many decimals in '" +
                                          std::string(text) + "'");
    }
    ratio.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) ratio.den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, text);
    const std::uint64_t f = frac.empty() ? 0 : parse_u64(frac, text);
    ratio.num = w * ratio.den + f;
  } else {
    ratio.num = parse_u64(text, text);
  }
  if (ratio.den == 0) {
    throw Error(ErrorKind::kConfig,
                "zero denominator in '" + std::string(text) + "'");
  }
  return ratio;
}

std::string to_string(const Ratio& ratio) {
  return std::to_string(ratio.num) + "/" + std::to_string(ratio.den);
}

void RRConfig::validate() const {
  auto check = [](const Ratio& r, const char* what) {
    if (r.den == 0 || r.num > r.den) {
      throw Error(ErrorKind::kConfig,
                  std::string(what) + " must lie in [0, 1], got " +
                      to_string(r));
    }
  };
  check(removal_fraction_cap, "removal fraction cap");
  check(apply_probability, "apply probability");
}

std::size_t max_removals(std::size_t word_count, const Ratio& cap) {
  const auto product = static_cast<unsigned __int128>(word_count) * cap.num;
  return static_cast<std::size_t>(product / cap.den);
}

RRDecision draw_removal(std::size_t word_count, const RRConfig& config,
                        Engine& engine) {
  RRDecision decision;
  const Ratio& p = config.apply_probability;
  decision.coin = uniform_below(engine, p.den) < p.num ? 1 : 0;
  if (decision.coin == 0) return decision;
  const std::size_t bound = max_removals(word_count, config.removal_fraction_cap);
  const auto n = static_cast<std::size_t>(uniform_below(engine, bound + 1));
  decision.removed = sample_indices(engine, word_count, n);
  return decision;
}

Corpus rr_transform(Corpus corpus, const RRConfig& config, Engine& engine,
                    RRDecision* decision) {
  RRDecision drawn = draw_removal(corpus.words.size(), config, engine);
  // Index-addressed removal: the selected word becomes an empty slot and the
  // punctuation list is left untouched.
  for (const std::size_t index : drawn.removed) corpus.words[index].text.clear();
  if (decision) *decision = std::move(drawn);
  return corpus;
}

RRProvenance augment_sample(Sample& sample, std::uint64_t ordinal,
                            const RRConfig& config) {
  Engine engine(derive_seed(config.seed, ordinal));
  RRProvenance record{sample.id, {}};
  Corpus corpus = rr_transform(tokenize(sample.text), config, engine,
                               &record.decision);
  if (!record.decision.removed.empty()) sample.text = detokenize(corpus);
  if (!sample.provenance.is_object()) {
    sample.provenance = nlohmann::ordered_json::object();
  }
  sample.provenance["rr"] = {{"seed", config.seed},
                             {"r", record.decision.coin},
                             {"n", record.decision.removed.size()}};
  return record;
}

Dataset augment_dataset(Dataset dataset, const RRConfig& config,
                        std::vector<RRProvenance>* provenance) {
  config.validate();
  if (provenance) provenance->clear();
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    RRProvenance record = augment_sample(dataset.samples[i], i, config);
    if (provenance) provenance->push_back(std::move(record));
  }
  return dataset;
}

std::string format_provenance_line(const RRProvenance& record) {
  nlohmann::ordered_json line;
  line["id"] = record.id;
  line["r"] = record.decision.coin;
  line["n"] = record.decision.removed.size();
  line["removed_indices"] = record.decision.removed;
  return line.dump();
}

}  // namespace advtext
