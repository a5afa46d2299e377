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
#include "advtext/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "advtext/error.hpp"
#include "advtext/random.hpp"
#include "advtext/unicode.hpp"

namespace advtext {

using nlohmann::ordered_json;

std::string_view to_string(Label label) {
  return label == Label::kMachine ? "machine" : "human";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "human") return Label::kHuman;
  if (text == "machine") return Label::kMachine;
  return std::nullopt;
}

namespace {

Error schema_error(std::string_view origin, std::size_t line_no,
                   const std::string& what) {
  return Error(ErrorKind::kSchema, std::string(origin) + ":" +
                                       std::to_string(line_no) + ": " + what);
}

std::string required_string(const ordered_json& object, const char* field,
                            std::string_view origin, std::size_t line_no) {
  const auto it = object.find(field);
  if (it == object.end()) {
    throw schema_error(origin, line_no,
                       std::string("missing field '") + field + "'");
  }
  if (!it->is_string()) {
    throw schema_error(origin, line_no,
                       std::string("field '") + field + "' must be a string");
  }
  return it->get<std::string>();
}

Sample parse_sample(std::string_view line, std::string_view origin,
                    std::size_t line_no) {
  ordered_json object;
  try {
    object = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw schema_error(origin, line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!object.is_object()) {
    throw schema_error(origin, line_no, "line is not a JSON object");
  }
  Sample sample;
  sample.id = required_string(object, "id", origin, line_no);
  sample.group_id = required_string(object, "group_id", origin, line_no);
  sample.text = required_string(object, "text", origin, line_no);
  const std::string label = required_string(object, "label", origin, line_no);
  const auto parsed = parse_label(label);
  if (!parsed) {
    throw schema_error(origin, line_no,
                       "label must be 'human' or 'machine', got '" + label + "'");
  }
  sample.label = *parsed;
  if (const auto it = object.find("provenance");
      it != object.end() && !it->is_null()) {
    sample.provenance = *it;
  }
  return sample;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Sample parse_sample_line(std::string_view line, std::size_t line_no) {
  return parse_sample(line, "<line>", line_no);
}

std::string format_sample_line(const Sample& sample) {
  ordered_json object;
  object["id"] = sample.id;
  object["group_id"] = sample.group_id;
  object["text"] = unicode::nfc(sample.text);
  object["label"] = std::string(to_string(sample.label));
  if (!sample.provenance.is_null()) object["provenance"] = sample.provenance;
  return object.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void for_each_batch(
    std::istream& in, std::string_view origin, std::size_t batch_size,
    const std::function<void(std::vector<Sample>&, std::size_t)>& sink) {
  if (batch_size == 0) batch_size = 1;
  std::unordered_set<std::string> seen;
  std::vector<Sample> batch;
  std::size_t first_ordinal = 0;
  std::size_t ordinal = 0;
  std::size_t line_no = 0;
  std::string line;
  while (next_line(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    Sample sample = parse_sample(line, origin, line_no);
    if (!seen.insert(sample.id).second) {
      throw schema_error(origin, line_no, "duplicate id '" + sample.id + "'");
    }
    batch.push_back(std::move(sample));
    ++ordinal;
    if (batch.size() == batch_size) {
      sink(batch, first_ordinal);
      batch.clear();
      first_ordinal = ordinal;
    }
  }
  if (in.bad()) {
    throw Error(ErrorKind::kIo, "error reading " + std::string(origin));
  }
  if (!batch.empty()) sink(batch, first_ordinal);
}

Dataset read_jsonl(std::istream& in, std::string_view origin) {
  Dataset dataset;
  for_each_batch(in, origin, 4096, [&](std::vector<Sample>& batch, std::size_t) {
    std::move(batch.begin(), batch.end(), std::back_inserter(dataset.samples));
  });
  return dataset;
}

Dataset read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return read_jsonl(in, path.string());
}

void write_jsonl(const Dataset& dataset, std::ostream& out) {
  for (const auto& sample : dataset.samples) {
    out << format_sample_line(sample) << '\n';
  }
}

void write_jsonl(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  write_jsonl(dataset, out);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "error writing " + path.string());
}

// --- COCO --------------------------------------------------------------------

namespace {

std::string id_string(const nlohmann::json& value, std::string_view origin,
                      const std::string& what) {
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number_unsigned()) {
    return std::to_string(value.get<unsigned long long>());
  }
  if (value.is_string()) return value.get<std::string>();
  throw Error(ErrorKind::kSchema, std::string(origin) + ": " + what +
                                      " must be an integer or string");
}

// Numeric ids order numerically, others lexicographically after them.
struct IdKey {
  bool numeric;
  long double number;
  std::string text;

  static IdKey of(const std::string& s) {
    IdKey key{false, 0, s};
    if (!s.empty() && std::all_of(s.begin(), s.end(),
                                  [](char c) { return c >= '0' && c <= '9'; })) {
      key.numeric = true;
      key.number = std::stold(s);
    }
    return key;
  }

  bool operator<(const IdKey& other) const {
    if (numeric != other.numeric) return numeric;
    if (numeric && number != other.number) return number < other.number;
    return text < other.text;
  }
};

}  // namespace

Dataset import_coco(std::istream& in, Label label, std::string_view origin) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSchema,
                std::string(origin) + ": invalid JSON: " + e.what());
  }
  if (!root.is_object()) {
    throw Error(ErrorKind::kSchema,
                std::string(origin) + ": top level must be an object");
  }
  const auto annotations = root.find("annotations");
  if (annotations == root.end() || !annotations->is_array()) {
    throw Error(ErrorKind::kSchema,
                std::string(origin) + ": missing 'annotations' array");
  }

  std::optional<std::set<std::string>> known_images;
  if (const auto images = root.find("images"); images != root.end()) {
    if (!images->is_array()) {
      throw Error(ErrorKind::kSchema,
                  std::string(origin) + ": 'images' must be an array");
    }
    known_images.emplace();
    for (const auto& image : *images) {
      if (!image.is_object() || !image.contains("id")) {
        throw Error(ErrorKind::kSchema,
                    std::string(origin) + ": image entry without 'id'");
      }
      known_images->insert(id_string(image["id"], origin, "images[].id"));
    }
  }

  struct Row {
    IdKey image;
    IdKey annotation;
    Sample sample;
  };
  std::vector<Row> rows;
  rows.reserve(annotations->size());
  const std::string prefix = label == Label::kHuman ? "h-" : "m-";
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < annotations->size(); ++i) {
    const auto& a = (*annotations)[i];
    const std::string where =
        std::string(origin) + ": annotations[" + std::to_string(i) + "]";
    if (!a.is_object()) {
      throw Error(ErrorKind::kSchema, where + " is not an object");
    }
    if (!a.contains("image_id")) {
      throw Error(ErrorKind::kSchema, where + " has no 'image_id'");
    }
    const auto caption = a.find("caption");
    if (caption == a.end() || !caption->is_string()) {
      throw Error(ErrorKind::kSchema, where + " has no string 'caption'");
    }
    const std::string image_id = id_string(a["image_id"], origin, where + ".image_id");
    if (known_images && known_images->count(image_id) == 0) {
      throw Error(ErrorKind::kSchema,
                  where + " references unknown image " + image_id);
    }
    const std::string ann_id = a.contains("id")
                                   ? id_string(a["id"], origin, where + ".id")
                                   : std::to_string(i);
    if (!seen_ids.insert(ann_id).second) {
      throw Error(ErrorKind::kSchema, where + " duplicates annotation id " + ann_id);
    }
    Sample sample{prefix + ann_id, image_id, caption->get<std::string>(), label, {}};
    rows.push_back({IdKey::of(image_id), IdKey::of(ann_id), std::move(sample)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.image < y.image) return true;
    if (y.image < x.image) return false;
    return x.annotation < y.annotation;
  });

  Dataset dataset;
  dataset.samples.reserve(rows.size());
  for (auto& row : rows) dataset.samples.push_back(std::move(row.sample));
  return dataset;
}

Dataset import_coco(const std::filesystem::path& path, Label label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return import_coco(in, label, path.string());
}

// --- Split -------------------------------------------------------------------

void validate_ratios(const SplitRatios& ratios) {
  const double sum = ratios.train + ratios.val + ratios.test;
  const bool finite = std::isfinite(ratios.train) && std::isfinite(ratios.val) &&
                      std::isfinite(ratios.test);
  if (!finite || ratios.train <= 0 || ratios.val <= 0 || ratios.test <= 0 ||
      std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "split ratios must be positive and sum to 1, got " << ratios.train
        << ":" << ratios.val << ":" << ratios.test;
    throw Error(ErrorKind::kInvalidRatios, msg.str());
  }
}

std::array<std::size_t, 3> split_group_counts(std::size_t group_count,
                                              const SplitRatios& ratios) {
  validate_ratios(ratios);
  const std::array<double, 3> shares = {ratios.train, ratios.val, ratios.test};
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double target = shares[k] * static_cast<double>(group_count);
    // Snap targets that are integral up to rounding noise (0.7 * 10000).
    const double nearest = std::round(target);
    const double exact = std::abs(target - nearest) < 1e-6 ? nearest : target;
    counts[k] = static_cast<std::size_t>(std::floor(exact));
    remainders[k] = exact - std::floor(exact);
    assigned += counts[k];
  }
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return remainders[x] > remainders[y];
  });
  for (std::size_t k = 0; assigned < group_count; k = (k + 1) % 3) {
    ++counts[order[k]];
    ++assigned;
  }
  // Ratios summing to 1 + eps can overshoot by a group after snapping.
  for (std::size_t k = 3; assigned > group_count; k = (k + 2) % 3) {
    const std::size_t slot = order[(k + 2) % 3];
    if (counts[slot] > 0) {
      --counts[slot];
      --assigned;
    }
  }
  return counts;
}

DatasetSplit split(const Dataset& dataset, const SplitRatios& ratios,
                   std::uint64_t seed) {
  validate_ratios(ratios);
  std::vector<std::string> groups;
  std::unordered_map<std::string, std::size_t> group_index;
  for (const auto& sample : dataset.samples) {
    if (group_index.emplace(sample.group_id, groups.size()).second) {
      groups.push_back(sample.group_id);
    }
  }
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Engine engine(splitmix64(seed));
  shuffle(order, engine);

  const auto counts = split_group_counts(groups.size(), ratios);
  std::vector<int> assignment(groups.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    assignment[order[pos]] =
        pos < counts[0] ? 0 : (pos < counts[0] + counts[1] ? 1 : 2);
  }

  DatasetSplit out;
  Dataset* parts[3] = {&out.train, &out.val, &out.test};
  for (const auto& sample : dataset.samples) {
    parts[assignment[group_index.at(sample.group_id)]]->samples.push_back(sample);
  }
  return out;
}

}  // namespace advtext
