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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "advtext/error.hpp"
#include "advtext/unicode.hpp"
#include "test_support.hpp"

namespace advtext {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kConfig;
}

TEST(Jsonl, ReadsValidLines) {
  std::istringstream in(
      R"({"id":"a","group_id":"1","text":"a dog","label":"human"})" "\n"
      R"({"id":"b","group_id":"1","text":"a cat","label":"machine","provenance":{"op":"mwr"}})" "\n");
  const Dataset d = read_jsonl(in);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.samples[1].label, Label::kMachine);
  EXPECT_EQ(d.samples[1].provenance["op"], "mwr");
  EXPECT_TRUE(d.samples[0].provenance.is_null());
}

TEST(Jsonl, EmptyFileIsEmptyDataset) {
  std::istringstream in("");
  EXPECT_TRUE(read_jsonl(in).empty());
}

TEST(Jsonl, BadLabelReportsLineNumber) {
  std::istringstream in(
      R"({"id":"a","group_id":"1","text":"x","label":"human"})" "\n"
      R"({"id":"b","group_id":"1","text":"y","label":"robot"})" "\n");
  try {
    read_jsonl(in, "data.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSchema);
    EXPECT_NE(std::string(e.what()).find("data.jsonl:2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("robot"), std::string::npos);
  }
}

TEST(Jsonl, SchemaViolations) {
  auto read = [](std::string text) {
    return [text] {
      std::istringstream in(text);
      read_jsonl(in);
    };
  };
  EXPECT_EQ(kind_of(read(R"({"id":"a","text":"x","label":"human"})")), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(read(R"({"id":1,"group_id":"1","text":"x","label":"human"})")),
            ErrorKind::kSchema);
  EXPECT_EQ(kind_of(read("not json")), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(read("[1,2]")), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(read(R"({"id":"a","group_id":"1","text":"x","label":"human"})" "\n"
                         R"({"id":"a","group_id":"2","text":"y","label":"human"})")),
            ErrorKind::kSchema);
  EXPECT_EQ(kind_of([] { read_jsonl(std::filesystem::path("/nonexistent.jsonl")); }),
            ErrorKind::kIo);
}

TEST(Jsonl, CanonicalLineLayout) {
  Sample s{"id1", "42", "Cafe\u0301 au lait", Label::kMachine, {}};
  s.provenance["op"] = "mcr-a";
  // NFC folds e + U+0301 into U+00E9.
  EXPECT_EQ(format_sample_line(s),
            std::string(R"({"id":"id1","group_id":"42","text":"Caf)") + "\u00e9" +
                R"( au lait","label":"machine","provenance":{"op":"mcr-a"}})");
}

TEST(Jsonl, RoundTripPreservesAllFields) {
  std::mt19937_64 rng(4);
  Dataset d;
  for (int i = 0; i < 200; ++i) {
    Sample s{"id" + std::to_string(i), "g" + std::to_string(i % 17),
             unicode::nfc(testing::random_unicode(rng, 30)),
             i % 3 ? Label::kMachine : Label::kHuman, {}};
    if (i % 4 == 0) s.provenance = {{"op", "mwr"}, {"rr", {{"seed", i}}}};
    d.samples.push_back(std::move(s));
  }
  std::stringstream first;
  write_jsonl(d, first);
  const Dataset back = read_jsonl(first);
  EXPECT_EQ(back, d);
  std::stringstream second;
  write_jsonl(back, second);
  EXPECT_EQ(second.str(), first.str());
}

TEST(Jsonl, StreamingBatchesCoverFileInOrder) {
  std::stringstream data;
  for (int i = 0; i < 10; ++i) {
    data << R"({"id":")" << i << R"(","group_id":"g","text":"t","label":"human"})" << "\n";
  }
  std::vector<std::size_t> firsts;
  std::vector<std::string> ids;
  for_each_batch(data, "x", 4, [&](std::vector<Sample>& batch, std::size_t first) {
    firsts.push_back(first);
    for (auto& s : batch) ids.push_back(s.id);
  });
  EXPECT_EQ(firsts, (std::vector<std::size_t>{0, 4, 8}));
  EXPECT_EQ(ids.size(), 10u);
  EXPECT_EQ(ids.back(), "9");
}

TEST(ImportCoco, OneSamplePerCaptionGroupedByImage) {
  std::istringstream in(testing::synthetic_coco(2, 5, 1));
  const Dataset d = import_coco(in, Label::kMachine);
  ASSERT_EQ(d.size(), 10u);
  std::set<std::string> groups;
  for (const auto& s : d.samples) {
    groups.insert(s.group_id);
    EXPECT_EQ(s.label, Label::kMachine);
    EXPECT_EQ(s.id.rfind("m-", 0), 0u);
  }
  EXPECT_EQ(groups.size(), 2u);
}

TEST(ImportCoco, OrdersByImageThenAnnotationId) {
  std::istringstream in(R"({"annotations":[
      {"image_id":20,"id":5,"caption":"c"},
      {"image_id":3,"id":9,"caption":"b"},
      {"image_id":3,"id":10,"caption":"a"},
      {"image_id":20,"id":1,"caption":"d"}]})");
  const Dataset d = import_coco(in, Label::kHuman);
  std::vector<std::string> ids;
  for (const auto& s : d.samples) ids.push_back(s.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"h-9", "h-10", "h-1", "h-5"}));
  EXPECT_EQ(d.samples[0].group_id, "3");
}

TEST(ImportCoco, EmptyAndMalformedInputs) {
  std::istringstream empty(R"({"images":[],"annotations":[]})");
  EXPECT_TRUE(import_coco(empty, Label::kHuman).empty());
  auto import = [](std::string text) {
    return [text] {
      std::istringstream in(text);
      import_coco(in, Label::kHuman);
    };
  };
  EXPECT_EQ(kind_of(import(R"({"images":[]})")), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(import(R"({"annotations":[{"image_id":1}]})")), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(import(R"({"annotations":[{"caption":"x"}]})")), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(import(R"({"images":[{"id":2}],"annotations":[{"image_id":1,"caption":"x"}]})")),
            ErrorKind::kSchema);
  EXPECT_EQ(kind_of(import("{")), ErrorKind::kSchema);
}

TEST(ImportCoco, PublishedScaleHundredThousandCaptions) {
  std::istringstream human(testing::synthetic_coco(10000, 5, 1, 1));
  std::istringstream machine(testing::synthetic_coco(10000, 5, 2, 1));
  const Dataset h = import_coco(human, Label::kHuman);
  const Dataset m = import_coco(machine, Label::kMachine);
  EXPECT_EQ(h.size() + m.size(), 100000u);
}

TEST(Split, GroupCountsFollowRatios) {
  EXPECT_EQ(split_group_counts(10000, {}), (std::array<std::size_t, 3>{7000, 1500, 1500}));
  EXPECT_EQ(split_group_counts(1, {}), (std::array<std::size_t, 3>{1, 0, 0}));
  EXPECT_EQ(split_group_counts(0, {}), (std::array<std::size_t, 3>{0, 0, 0}));
}

TEST(Split, CountsWithinOneGroupOfTarget) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t groups = rng() % 5000;
    double a = 1 + rng() % 100, b = 1 + rng() % 100, c = 1 + rng() % 100;
    const double sum = a + b + c;
    const SplitRatios ratios{a / sum, b / sum, c / (sum)};
    const SplitRatios fixed{ratios.train, ratios.val, 1.0 - ratios.train - ratios.val};
    const auto counts = split_group_counts(groups, fixed);
    ASSERT_EQ(counts[0] + counts[1] + counts[2], groups);
    const double targets[3] = {fixed.train * groups, fixed.val * groups, fixed.test * groups};
    for (int k = 0; k < 3; ++k) {
      ASSERT_LT(std::abs(static_cast<double>(counts[k]) - targets[k]), 1.0);
    }
  }
}

TEST(Split, RejectsInvalidRatios) {
  EXPECT_EQ(kind_of([] { validate_ratios({0.5, 0.5, 0.0}); }), ErrorKind::kInvalidRatios);
  EXPECT_EQ(kind_of([] { validate_ratios({0.7, 0.2, 0.2}); }), ErrorKind::kInvalidRatios);
  EXPECT_EQ(kind_of([] { validate_ratios({-0.1, 0.6, 0.5}); }), ErrorKind::kInvalidRatios);
  EXPECT_NO_THROW(validate_ratios({0.7, 0.15, 0.15}));
}

Dataset grouped(std::size_t groups, std::size_t per_group) {
  Dataset d;
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t k = 0; k < per_group; ++k) {
      d.samples.push_back({std::to_string(g) + "-" + std::to_string(k), std::to_string(g),
                           "text", k % 2 ? Label::kMachine : Label::kHuman, {}});
    }
  }
  return d;
}

TEST(Split, PartitionsWithoutGroupLeakage) {
  const Dataset d = grouped(997, 3);
  const DatasetSplit parts = split(d, {}, 123);
  std::map<std::string, int> where;
  std::size_t total = 0;
  int index = 0;
  for (const Dataset* part : {&parts.train, &parts.val, &parts.test}) {
    for (const auto& s : part->samples) {
      const auto [it, fresh] = where.emplace(s.group_id, index);
      ASSERT_EQ(it->second, index) << "group " << s.group_id << " leaked";
    }
    total += part->size();
    ++index;
  }
  EXPECT_EQ(total, d.size());
  EXPECT_EQ(where.size(), 997u);
}

TEST(Split, SingleGroupLandsInOneSplit) {
  const DatasetSplit parts = split(grouped(1, 4), {}, 5);
  EXPECT_EQ(parts.train.size() + parts.val.size() + parts.test.size(), 4u);
  const int nonempty = !parts.train.empty() + !parts.val.empty() + !parts.test.empty();
  EXPECT_EQ(nonempty, 1);
}

TEST(Split, DeterministicPerSeed) {
  const Dataset d = grouped(200, 2);
  const DatasetSplit a = split(d, {}, 77);
  const DatasetSplit b = split(d, {}, 77);
  const DatasetSplit c = split(d, {}, 78);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.val, b.val);
  EXPECT_EQ(a.test, b.test);
  EXPECT_NE(a.train, c.train);
}

}  // namespace
}  // namespace advtext
