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
#ifndef ADVTEXT_METRICS_HPP_
#define ADVTEXT_METRICS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "advtext/dataset.hpp"
#include "json.hpp"

namespace advtext {

// Detector output for one sample: probability that the text is machine-made.
struct ScoreRecord {
  std::string id;
  double score = 0.0;
  Label label = Label::kHuman;

  bool operator==(const ScoreRecord&) const = default;
};

// Mann-Whitney count in half units: twice the number of (machine, human)
// pairs the machine sample wins, ties counting one half.
struct AucCount {
  std::uint64_t twice_wins = 0;
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;

  double value() const;
};

// Rank-sum evaluation with midranks for ties; O(n log n). Throws
// Error(kDegenerateClasses) unless both labels are present.
AucCount auc_count(std::span<const ScoreRecord> records);
double auc(std::span<const ScoreRecord> records);

// Decision rule: score >= threshold predicts machine. Throw
// Error(kEmptyInput) on empty input.
double accuracy(std::span<const ScoreRecord> records, double threshold = 0.5);
// Positive class is machine; F1 = 2TP / (2TP + FP + FN), 0 when undefined.
double f1(std::span<const ScoreRecord> records, double threshold = 0.5);

struct RocPoint {
  double fpr;
  double tpr;
};

// ROC vertices from (0,0) to (1,1), one per distinct score threshold.
std::vector<RocPoint> roc_points(std::span<const ScoreRecord> records);

struct TaskResult {
  std::string task_id;
  double auc = 0.0;
  double acc = 0.0;
  double f1 = 0.0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
};

// "HvM" for the unmutated machine set, "HvM_<preset family>" otherwise. With
// `merge_letters` the character presets mcr-a/mcr-e share the task HvM_mcr.
std::string task_id_for(std::string_view set_id, bool merge_letters = true);

// Canonical column order: HvM, mwr, mwj, mwd, mcr, mcj, mcd; others sorted
// after them.
bool task_order_less(std::string_view a, std::string_view b);

// Scores every task as the shared human records against that task's machine
// records. Metric errors are rethrown with the task id prefixed.
std::vector<TaskResult> run_tasks(
    std::span<const ScoreRecord> human,
    const std::map<std::string, std::vector<ScoreRecord>>& machine_sets,
    double threshold = 0.5);

struct MetricMeans {
  double auc = 0.0;
  double acc = 0.0;
  double f1 = 0.0;
  std::size_t tasks = 0;
};

// Arithmetic mean over the mutation tasks (every task except HvM).
MetricMeans mutation_average(std::span<const TaskResult> results);

// {"tasks": {task: {auc, acc, f1, n_pos, n_neg}}, "mutation_average": {...},
//  "threshold": t}
nlohmann::ordered_json report_json(std::span<const TaskResult> results,
                                   double threshold);
// Metric rows by task columns, four decimals.
std::string report_table(std::span<const TaskResult> results);

}  // namespace advtext

#endif  // ADVTEXT_METRICS_HPP_
