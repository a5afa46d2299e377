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
#ifndef ADVTEXT_RR_AUGMENT_HPP_
#define ADVTEXT_RR_AUGMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "advtext/corpus.hpp"
#include "advtext/dataset.hpp"
#include "advtext/random.hpp"

namespace advtext {

// Non-negative rational; denominators must be positive.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool operator==(const Ratio&) const = default;
};

// Parses "1/3", "2" or a finite decimal such as "0.5" (exactly).
Ratio parse_ratio(std::string_view text);
std::string to_string(const Ratio& ratio);

struct RRConfig {
  std::uint64_t seed = 0;
  Ratio removal_fraction_cap{1, 3};
  Ratio apply_probability{1, 2};

  // Throws Error(kConfig) unless both ratios lie in [0, 1].
  void validate() const;
};

// What happened to one sample: the coin `r` and the removed word indices
// (ascending, so n == removed.size()).
struct RRDecision {
  int coin = 0;
  std::vector<std::size_t> removed;
};

// floor(word_count * cap), computed exactly.
std::size_t max_removals(std::size_t word_count, const Ratio& cap);

// Draws the coin, then n uniform in [0, max_removals], then n distinct
// word indices.
RRDecision draw_removal(std::size_t word_count, const RRConfig& config,
                        Engine& engine);

// Random Removing for one corpus. `engine` should be seeded with
// derive_seed(config.seed, sample ordinal).
Corpus rr_transform(Corpus corpus, const RRConfig& config, Engine& engine,
                    RRDecision* decision = nullptr);

struct RRProvenance {
  std::string id;
  RRDecision decision;
};

// Transforms the sample at `ordinal` in place and records seed, r and n in
// its provenance under "rr".
RRProvenance augment_sample(Sample& sample, std::uint64_t ordinal,
                            const RRConfig& config);

Dataset augment_dataset(Dataset dataset, const RRConfig& config,
                        std::vector<RRProvenance>* provenance = nullptr);

// Sidecar line: {"id":...,"r":0|1,"n":...,"removed_indices":[...]}.
std::string format_provenance_line(const RRProvenance& record);

}  // namespace advtext

#endif  // ADVTEXT_RR_AUGMENT_HPP_
