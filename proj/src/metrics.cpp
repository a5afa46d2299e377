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
#include "advtext/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "advtext/error.hpp"

namespace advtext {

double AucCount::value() const {
  return static_cast<double>(twice_wins) /
         (2.0 * static_cast<double>(positives) * static_cast<double>(negatives));
}

AucCount auc_count(std::span<const ScoreRecord> records) {
  AucCount count;
  for (const auto& r : records) {
    (r.label == Label::kMachine ? count.positives : count.negatives)++;
  }
  if (count.positives == 0 || count.negatives == 0) {
    throw Error(ErrorKind::kDegenerateClasses,
                "AUC needs both human and machine records (got " +
                    std::to_string(count.positives) + " machine, " +
                    std::to_string(count.negatives) + " human)");
  }

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].score < records[b].score;
  });

  // Sum of twice the midranks of positives. Ranks are 1-based; a tie block
  // spanning ranks [lo, hi] gives each member midrank (lo + hi) / 2.
  std::uint64_t twice_rank_sum = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && records[order[j]].score == records[order[i]].score) ++j;
    const std::uint64_t twice_midrank = (i + 1) + j;
    for (std::size_t k = i; k < j; ++k) {
      if (records[order[k]].label == Label::kMachine) twice_rank_sum += twice_midrank;
    }
    i = j;
  }
  // U = R - P(P+1)/2, doubled.
  count.twice_wins = twice_rank_sum - count.positives * (count.positives + 1);
  return count;
}

double auc(std::span<const ScoreRecord> records) {
  return auc_count(records).value();
}

namespace {

struct Confusion {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

Confusion confusion(std::span<const ScoreRecord> records, double threshold,
                    const char* metric) {
  if (records.empty()) {
    throw Error(ErrorKind::kEmptyInput, std::string(metric) + " of no records");
  }
  Confusion c;
  for (const auto& r : records) {
    const bool predicted_machine = r.score >= threshold;
    if (r.label == Label::kMachine) {
      (predicted_machine ? c.tp : c.fn)++;
    } else {
      (predicted_machine ? c.fp : c.tn)++;
    }
  }
  return c;
}

}  // namespace

double accuracy(std::span<const ScoreRecord> records, double threshold) {
  const Confusion c = confusion(records, threshold, "accuracy");
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(records.size());
}

double f1(std::span<const ScoreRecord> records, double threshold) {
  const Confusion c = confusion(records, threshold, "F1");
  const std::size_t denominator = 2 * c.tp + c.fp + c.fn;
  if (denominator == 0) return 0.0;
  return static_cast<double>(2 * c.tp) / static_cast<double>(denominator);
}

std::vector<RocPoint> roc_points(std::span<const ScoreRecord> records) {
  const AucCount count = auc_count(records);
  std::vector<const ScoreRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoreRecord* a, const ScoreRecord* b) { return a->score > b->score; });

  std::vector<RocPoint> points{{0.0, 0.0}};
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    const double score = sorted[i]->score;
    for (; i < sorted.size() && sorted[i]->score == score; ++i) {
      (sorted[i]->label == Label::kMachine ? tp : fp)++;
    }
    points.push_back({static_cast<double>(fp) / static_cast<double>(count.negatives),
                      static_cast<double>(tp) / static_cast<double>(count.positives)});
  }
  return points;
}

namespace {

constexpr std::array<std::string_view, 7> kTaskOrder = {
    "HvM", "HvM_mwr", "HvM_mwj", "HvM_mwd", "HvM_mcr", "HvM_mcj", "HvM_mcd"};

std::size_t task_rank(std::string_view id) {
  // Letter-split ids (HvM_mcr-a) sort with their family.
  const std::string_view family = id.substr(0, id.find('-'));
  const auto it = std::find(kTaskOrder.begin(), kTaskOrder.end(), family);
  return static_cast<std::size_t>(it - kTaskOrder.begin());
}

}  // namespace

std::string task_id_for(std::string_view set_id, bool merge_letters) {
  if (set_id.empty() || set_id == "M" || set_id == "HvM" || set_id == "none") {
    return "HvM";
  }
  std::string_view family = set_id;
  if (merge_letters) family = family.substr(0, family.find('-'));
  return "HvM_" + std::string(family);
}

bool task_order_less(std::string_view a, std::string_view b) {
  const std::size_t ra = task_rank(a);
  const std::size_t rb = task_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::vector<TaskResult> run_tasks(
    std::span<const ScoreRecord> human,
    const std::map<std::string, std::vector<ScoreRecord>>& machine_sets,
    double threshold) {
  std::vector<std::string> ids;
  for (const auto& [id, records] : machine_sets) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
    return task_order_less(a, b);
  });

  std::vector<TaskResult> results;
  results.reserve(ids.size());
  for (const auto& id : ids) {
    const auto& machine = machine_sets.at(id);
    try {
      if (machine.empty()) {
        throw Error(ErrorKind::kEmptyInput, "machine set is empty");
      }
      std::vector<ScoreRecord> records(human.begin(), human.end());
      records.insert(records.end(), machine.begin(), machine.end());
      const AucCount count = auc_count(records);
      results.push_back({id, count.value(), accuracy(records, threshold),
                         f1(records, threshold), count.positives,
                         count.negatives});
    } catch (const Error& e) {
      throw Error(e.kind(), "task " + id + ": " + e.what());
    }
  }
  return results;
}

MetricMeans mutation_average(std::span<const TaskResult> results) {
  MetricMeans means;
  for (const auto& r : results) {
    if (r.task_id == "HvM") continue;
    means.auc += r.auc;
    means.acc += r.acc;
    means.f1 += r.f1;
    ++means.tasks;
  }
  if (means.tasks > 0) {
    const auto n = static_cast<double>(means.tasks);
    means.auc /= n;
    means.acc /= n;
    means.f1 /= n;
  }
  return means;
}

nlohmann::ordered_json report_json(std::span<const TaskResult> results,
                                   double threshold) {
  nlohmann::ordered_json report;
  report["threshold"] = threshold;
  report["tasks"] = nlohmann::ordered_json::object();
  for (const auto& r : results) {
    report["tasks"][r.task_id] = {{"auc", r.auc},     {"acc", r.acc},
                                  {"f1", r.f1},       {"n_pos", r.n_pos},
                                  {"n_neg", r.n_neg}};
  }
  const MetricMeans means = mutation_average(results);
  if (means.tasks > 0) {
    report["mutation_average"] = {{"auc", means.auc},
                                  {"acc", means.acc},
                                  {"f1", means.f1},
                                  {"tasks", means.tasks}};
  }
  return report;
}

std::string report_table(std::span<const TaskResult> results) {
  const MetricMeans means = mutation_average(results);
  std::vector<std::string> header = {"Metric"};
  for (const auto& r : results) header.push_back(r.task_id);
  if (means.tasks > 0) header.push_back("MutAvg");

  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };
  std::vector<std::vector<std::string>> rows = {header};
  const std::array<std::pair<const char*, double TaskResult::*>, 3> metrics = {{
      {"AUC", &TaskResult::auc}, {"ACC", &TaskResult::acc}, {"F1", &TaskResult::f1}}};
  const std::array<double, 3> mean_values = {means.auc, means.acc, means.f1};
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    std::vector<std::string> row = {metrics[m].first};
    for (const auto& r : results) row.push_back(fmt(r.*(metrics[m].second)));
    if (means.tasks > 0) row.push_back(fmt(mean_values[m]));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> counts = {"n(H/M)"};
  for (const auto& r : results) {
    counts.push_back(std::to_string(r.n_neg) + "/" + std::to_string(r.n_pos));
  }
  if (means.tasks > 0) counts.push_back("-");
  rows.push_back(std::move(counts));

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      const std::size_t pad = widths[c] - row[c].size();
      if (c == 0) {
        out << row[c] << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace advtext
