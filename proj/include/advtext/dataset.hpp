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
#ifndef ADVTEXT_DATASET_HPP_
#define ADVTEXT_DATASET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace advtext {

enum class Label { kHuman, kMachine };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);

struct Sample {
  std::string id;
  std::string group_id;  // source image; the unit of splitting
  std::string text;
  Label label = Label::kHuman;
  nlohmann::ordered_json provenance;  // null when absent

  bool operator==(const Sample&) const = default;
};

struct Dataset {
  std::vector<Sample> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  bool operator==(const Dataset&) const = default;
};

// --- JSONL -----------------------------------------------------------------
// One object per line: {"id","group_id","text","label"[,"provenance"]}.
// Parsing errors carry the 1-based line number.

Sample parse_sample_line(std::string_view line, std::size_t line_no);
// Canonical form: fixed field order, NFC text, no trailing newline.
std::string format_sample_line(const Sample& sample);

Dataset read_jsonl(std::istream& in, std::string_view origin = "<stream>");
Dataset read_jsonl(const std::filesystem::path& path);
void write_jsonl(const Dataset& dataset, std::ostream& out);
void write_jsonl(const Dataset& dataset, const std::filesystem::path& path);

// Streams a JSONL dataset without holding it in memory. `sink` receives
// batches of at most `batch_size` samples in file order, plus the ordinal of
// the first sample of the batch. Duplicate ids are detected across batches.
void for_each_batch(
    std::istream& in, std::string_view origin, std::size_t batch_size,
    const std::function<void(std::vector<Sample>&, std::size_t)>& sink);

// --- COCO captions import --------------------------------------------------

// Reads annotations[].{image_id,id,caption} (and images[].id when present).
// One sample per caption, ordered by (image_id, annotation id); ids are
// "<h|m>-<annotation id>", group_id is the image id.
Dataset import_coco(std::istream& in, Label label,
                    std::string_view origin = "<stream>");
Dataset import_coco(const std::filesystem::path& path, Label label);

// --- Splitting -------------------------------------------------------------

struct SplitRatios {
  double train = 0.70;
  double val = 0.15;
  double test = 0.15;
};

struct DatasetSplit {
  Dataset train;
  Dataset val;
  Dataset test;
};

// Throws Error(kInvalidRatios) unless all ratios are positive and sum to 1
// within 1e-9.
void validate_ratios(const SplitRatios& ratios);

// Number of groups per split for `group_count` groups. Each count is the
// floor of its target plus at most one leftover group (largest remainder).
std::array<std::size_t, 3> split_group_counts(std::size_t group_count,
                                              const SplitRatios& ratios);

// Shuffles groups (in order of first appearance) with `seed` and assigns
// them train, val, test by cumulative count. Samples keep input order.
DatasetSplit split(const Dataset& dataset, const SplitRatios& ratios,
                   std::uint64_t seed);

}  // namespace advtext

#endif  // ADVTEXT_DATASET_HPP_
