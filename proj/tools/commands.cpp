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
#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "advtext/corpus.hpp"
#include "advtext/dataset.hpp"
#include "advtext/error.hpp"
#include "advtext/lexicon.hpp"
#include "advtext/manifest.hpp"
#include "advtext/metrics.hpp"
#include "advtext/mutation.hpp"
#include "advtext/parallel.hpp"
#include "advtext/rr_augment.hpp"
#include "advtext/scorer.hpp"
#include "advtext/unicode.hpp"
#include "httplib.h"
#include "json.hpp"

namespace advtext::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kEndpointEnv = "ADVTEXT_SCORER_ENDPOINT";
constexpr std::size_t kStreamBatch = 2048;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return in;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "error writing " + path.string());
}

RunManifest start_manifest(std::string command,
                           const std::vector<std::string>& args) {
  RunManifest manifest;
  manifest.command = std::move(command);
  manifest.argv = args;
  return manifest;
}

// --- import-coco -------------------------------------------------------------

struct ImportOptions {
  std::vector<std::string> human;
  std::vector<std::string> machine;
  std::string output;
};

int import_coco_cmd(const ImportOptions& opt, const std::vector<std::string>& args) {
  if (opt.human.empty() && opt.machine.empty()) {
    throw Error(ErrorKind::kConfig, "import-coco needs --human and/or --machine files");
  }
  RunManifest manifest = start_manifest("import-coco", args);
  Dataset merged;
  std::set<std::string> ids;
  auto add = [&](const std::string& path, Label label) {
    Dataset part = import_coco(fs::path(path), label);
    for (auto& sample : part.samples) {
      if (!ids.insert(sample.id).second) {
        throw Error(ErrorKind::kSchema, path + ": duplicate sample id " + sample.id);
      }
      merged.samples.push_back(std::move(sample));
    }
    manifest.inputs.push_back(path);
  };
  for (const auto& path : opt.human) add(path, Label::kHuman);
  for (const auto& path : opt.machine) add(path, Label::kMachine);

  const fs::path out_path(opt.output);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  write_jsonl(merged, out_path);
  manifest.outputs.push_back(opt.output);
  write_manifest(manifest, manifest_path_for(out_path));

  std::set<std::string> groups;
  for (const auto& s : merged.samples) groups.insert(s.group_id);
  std::cerr << "imported " << merged.size() << " samples in " << groups.size()
            << " groups\n";
  return 0;
}

// --- split -------------------------------------------------------------------

SplitRatios parse_split_ratios(const std::string& text) {
  std::vector<double> parts;
  const bool ratio_notation = text.find(':') != std::string::npos;
  std::string token;
  std::istringstream in(text);
  const char separator = ratio_notation ? ':' : ',';
  while (std::getline(in, token, separator)) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidRatios, "cannot parse ratios '" + text + "'");
    }
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::kInvalidRatios,
                "expected three ratios train:val:test, got '" + text + "'");
  }
  if (ratio_notation) {
    // 70:15:15 style; scale to fractions.
    const double sum = parts[0] + parts[1] + parts[2];
    if (sum > 0) {
      for (auto& p : parts) p /= sum;
    }
  }
  SplitRatios ratios{parts[0], parts[1], parts[2]};
  validate_ratios(ratios);
  return ratios;
}

struct SplitOptions {
  std::string input;
  std::string ratios = "70:15:15";
  std::uint64_t seed = 0;
  std::string out_dir;
};

int split_cmd(const SplitOptions& opt, const std::vector<std::string>& args) {
  const SplitRatios ratios = parse_split_ratios(opt.ratios);
  const Dataset dataset = read_jsonl(fs::path(opt.input));
  const DatasetSplit parts = split(dataset, ratios, opt.seed);

  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  RunManifest manifest = start_manifest("split", args);
  manifest.inputs.push_back(opt.input);
  manifest.seeds.push_back(opt.seed);
  const std::pair<const char*, const Dataset*> outputs[] = {
      {"train.jsonl", &parts.train}, {"val.jsonl", &parts.val}, {"test.jsonl", &parts.test}};
  for (const auto& [name, part] : outputs) {
    write_jsonl(*part, dir / name);
    manifest.outputs.push_back((dir / name).string());
    std::set<std::string> groups;
    for (const auto& s : part->samples) groups.insert(s.group_id);
    std::cerr << name << ": " << groups.size() << " groups, " << part->size()
              << " samples\n";
  }
  write_manifest(manifest, dir / "manifest.json");
  return 0;
}

// --- mutate ------------------------------------------------------------------

struct LexiconOptions {
  std::string articles;
  std::string adjectives;
  std::string adverbs;

  LexiconSet load() const {
    LexiconSet set;
    if (!articles.empty()) set.articles = load_lexicon(articles);
    if (!adjectives.empty()) set.adjectives = load_lexicon(adjectives);
    if (!adverbs.empty()) set.adverbs = load_lexicon(adverbs);
    return set;
  }
  void record(RunManifest& manifest) const {
    for (const auto* path : {&articles, &adjectives, &adverbs}) {
      if (!path->empty()) manifest.inputs.push_back(*path);
    }
  }
};

struct MutateOptions {
  std::string input;
  std::string op;
  std::string filter = "machine";
  std::string output;
  std::size_t threads = 0;
  LexiconOptions lexicons;
};

int mutate_cmd(const MutateOptions& opt, const std::vector<std::string>& args) {
  const auto filter = parse_label_filter(opt.filter);
  if (!filter) {
    throw Error(ErrorKind::kConfig,
                "--filter must be human, machine or all, got '" + opt.filter + "'");
  }
  const OperatorSet op = make_preset(opt.op, opt.lexicons.load());
  const std::size_t threads = opt.threads ? opt.threads : default_thread_count();

  RunManifest manifest = start_manifest("mutate", args);
  manifest.inputs.push_back(opt.input);
  opt.lexicons.record(manifest);
  manifest.operators.push_back(op.id);

  std::ifstream in = open_input(opt.input);
  const fs::path out_path(opt.output);
  std::ofstream out = open_output(out_path);
  std::size_t mutated = 0;
  for_each_batch(in, opt.input, kStreamBatch, [&](std::vector<Sample>& batch, std::size_t) {
    std::vector<std::string> lines(batch.size());
    parallel_for(batch.size(), threads, [&](std::size_t i) {
      mutate_sample(batch[i], op, *filter);
      lines[i] = format_sample_line(batch[i]);
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      out << lines[i] << '\n';
      if (matches(*filter, batch[i].label)) ++mutated;
    }
  });
  finish(out, out_path);
  manifest.outputs.push_back(opt.output);
  write_manifest(manifest, manifest_path_for(out_path));
  std::cerr << "applied " << op.id << " to " << mutated << " samples\n";
  return 0;
}

// --- augment -----------------------------------------------------------------

struct AugmentOptions {
  std::string input;
  std::uint64_t seed = 0;
  std::string output;
  std::string provenance;
  std::string cap = "1/3";
  std::string probability = "1/2";
  std::size_t threads = 0;
};

int augment_cmd(const AugmentOptions& opt, const std::vector<std::string>& args) {
  RRConfig config;
  config.seed = opt.seed;
  config.removal_fraction_cap = parse_ratio(opt.cap);
  config.apply_probability = parse_ratio(opt.probability);
  config.validate();
  const std::size_t threads = opt.threads ? opt.threads : default_thread_count();

  const fs::path out_path(opt.output);
  const fs::path side_path = opt.provenance.empty()
                                 ? fs::path(opt.output + ".provenance.jsonl")
                                 : fs::path(opt.provenance);
  RunManifest manifest = start_manifest("augment", args);
  manifest.inputs.push_back(opt.input);
  manifest.seeds.push_back(opt.seed);
  manifest.operators.push_back("rr:cap=" + to_string(config.removal_fraction_cap) +
                               ",p=" + to_string(config.apply_probability));

  std::ifstream in = open_input(opt.input);
  std::ofstream out = open_output(out_path);
  std::ofstream side = open_output(side_path);
  std::size_t total = 0;
  std::size_t changed = 0;
  for_each_batch(in, opt.input, kStreamBatch, [&](std::vector<Sample>& batch, std::size_t first) {
    std::vector<std::string> lines(batch.size());
    std::vector<std::string> side_lines(batch.size());
    std::vector<char> removed_any(batch.size(), 0);
    parallel_for(batch.size(), threads, [&](std::size_t i) {
      const RRProvenance record = augment_sample(batch[i], first + i, config);
      removed_any[i] = record.decision.removed.empty() ? 0 : 1;
      lines[i] = format_sample_line(batch[i]);
      side_lines[i] = format_provenance_line(record);
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      out << lines[i] << '\n';
      side << side_lines[i] << '\n';
      changed += static_cast<std::size_t>(removed_any[i]);
    }
    total += batch.size();
  });
  finish(out, out_path);
  finish(side, side_path);
  manifest.outputs = {out_path.string(), side_path.string()};
  write_manifest(manifest, manifest_path_for(out_path));
  std::cerr << "augmented " << total << " samples, " << changed
            << " with words removed\n";
  return 0;
}

// --- score -------------------------------------------------------------------

struct ScoreOptions {
  std::string input;
  std::string output;
  std::string transport = "auto";
  std::string scorer_cmd;
  std::string endpoint;
  long long timeout_ms = 120000;
  std::size_t batch_size = 4096;
};

std::unique_ptr<Transport> make_transport(const ScoreOptions& opt,
                                          nlohmann::ordered_json& description) {
  std::string kind = opt.transport;
  std::string endpoint = opt.endpoint;
  if (endpoint.empty()) {
    if (const char* env = std::getenv(kEndpointEnv)) endpoint = env;
  }
  if (kind == "auto") {
    kind = !opt.scorer_cmd.empty() ? "stdio" : (!endpoint.empty() ? "http" : "");
    if (kind.empty()) {
      throw Error(ErrorKind::kConfig,
                  std::string("no scorer configured: pass --transport mock, "
                              "--scorer-cmd or --endpoint (or set ") +
                      kEndpointEnv + ")");
    }
  }
  const std::chrono::milliseconds timeout(opt.timeout_ms);
  description = {{"kind", kind}, {"timeout_ms", opt.timeout_ms},
                 {"batch_size", opt.batch_size}};
  if (kind == "mock") return std::make_unique<MockTransport>();
  if (kind == "stdio") {
    if (opt.scorer_cmd.empty()) {
      throw Error(ErrorKind::kConfig, "--transport stdio needs --scorer-cmd");
    }
    description["command"] = opt.scorer_cmd;
    return std::make_unique<StdioTransport>(opt.scorer_cmd, timeout);
  }
  if (kind == "http") {
    if (endpoint.empty()) {
      throw Error(ErrorKind::kConfig,
                  std::string("--transport http needs --endpoint or ") + kEndpointEnv);
    }
    description["endpoint"] = endpoint;
    return std::make_unique<HttpTransport>(endpoint, timeout);
  }
  throw Error(ErrorKind::kConfig, "unknown transport '" + kind +
                                      "' (expected mock, stdio, http)");
}

int score_cmd(const ScoreOptions& opt, const std::vector<std::string>& args) {
  RunManifest manifest = start_manifest("score", args);
  auto transport = make_transport(opt, manifest.transport);
  manifest.inputs.push_back(opt.input);

  std::ifstream in = open_input(opt.input);
  const fs::path out_path(opt.output);
  std::ofstream out = open_output(out_path);
  std::size_t scored = 0;
  const std::size_t batch_size = opt.batch_size ? opt.batch_size : SIZE_MAX;
  for_each_batch(in, opt.input, batch_size, [&](std::vector<Sample>& batch, std::size_t) {
    std::vector<ScoreRequest> requests;
    requests.reserve(batch.size());
    for (const auto& s : batch) requests.push_back({s.id, s.text});
    const auto responses = score_batch(requests, *transport);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      out << format_score_line({batch[i].id, responses[i].score, batch[i].label}) << '\n';
    }
    scored += batch.size();
  });
  finish(out, out_path);
  manifest.outputs.push_back(opt.output);
  write_manifest(manifest, manifest_path_for(out_path));
  std::cerr << "scored " << scored << " samples via " << transport->describe() << "\n";
  return 0;
}

// --- evaluate ----------------------------------------------------------------

struct EvaluateOptions {
  std::string baseline;
  std::string human;
  std::vector<std::string> mutated;
  std::string output;
  std::string table;
  std::string roc;
  double threshold = 0.5;
  bool split_letters = false;
};

int evaluate_cmd(const EvaluateOptions& opt, const std::vector<std::string>& args) {
  RunManifest manifest = start_manifest("evaluate", args);
  std::vector<ScoreRecord> human;
  std::map<std::string, std::vector<ScoreRecord>> machine_sets;

  const auto baseline = read_scores(opt.baseline);
  manifest.inputs.push_back(opt.baseline);
  machine_sets["HvM"];
  for (const auto& r : baseline) {
    (r.label == Label::kHuman ? human : machine_sets["HvM"]).push_back(r);
  }
  if (!opt.human.empty()) {
    human.clear();
    for (const auto& r : read_scores(opt.human)) {
      if (r.label == Label::kHuman) human.push_back(r);
    }
    manifest.inputs.push_back(opt.human);
  }
  for (const auto& spec : opt.mutated) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw Error(ErrorKind::kConfig, "--mutated expects ID=PATH, got '" + spec + "'");
    }
    const std::string set_id = spec.substr(0, eq);
    const std::string path = spec.substr(eq + 1);
    auto& bucket = machine_sets[task_id_for(set_id, !opt.split_letters)];
    for (const auto& r : read_scores(path)) {
      if (r.label == Label::kMachine) bucket.push_back(r);
    }
    manifest.inputs.push_back(path);
    manifest.operators.push_back(set_id);
  }

  const auto results = run_tasks(human, machine_sets, opt.threshold);
  const fs::path out_path(opt.output);
  {
    std::ofstream out = open_output(out_path);
    out << report_json(results, opt.threshold).dump(2) << '\n';
    finish(out, out_path);
  }
  manifest.outputs.push_back(opt.output);
  const std::string table = report_table(results);
  if (!opt.table.empty()) {
    std::ofstream out = open_output(opt.table);
    out << table;
    finish(out, opt.table);
    manifest.outputs.push_back(opt.table);
  }
  if (!opt.roc.empty()) {
    std::ofstream out = open_output(opt.roc);
    for (const auto& [task, machine] : machine_sets) {
      std::vector<ScoreRecord> records = human;
      records.insert(records.end(), machine.begin(), machine.end());
      for (const auto& p : roc_points(records)) {
        nlohmann::ordered_json line = {{"task", task}, {"fpr", p.fpr}, {"tpr", p.tpr}};
        out << line.dump() << '\n';
      }
    }
    finish(out, opt.roc);
    manifest.outputs.push_back(opt.roc);
  }
  write_manifest(manifest, manifest_path_for(out_path));
  std::cout << table;
  return 0;
}

// --- mock-scorer ---------------------------------------------------------------

int mock_scorer_cmd(int port, const std::string& host) {
  if (port <= 0) {
    std::ios::sync_with_stdio(false);
    serve_mock(std::cin, std::cout);
    return 0;
  }
  httplib::Server server;
  server.Post("/score", [](const httplib::Request& request, httplib::Response& response) {
    std::istringstream in(request.body);
    std::ostringstream out;
    try {
      serve_mock(in, out);
    } catch (const Error& e) {
      response.status = 400;
      response.set_content(e.what(), "text/plain");
      return;
    }
    response.set_content(out.str(), "application/x-ndjson");
  });
  std::cerr << "mock scorer listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    throw Error(ErrorKind::kTransport, "cannot listen on " + host + ":" + std::to_string(port));
  }
  return 0;
}

int tokenize_cmd(const std::string& text) {
  const Corpus corpus = tokenize(text);
  nlohmann::ordered_json json;
  json["words"] = corpus.word_texts();
  json["puncts"] = nlohmann::ordered_json::array();
  for (const auto& p : corpus.puncts) {
    json["puncts"].push_back({{"text", p.text},
                              {"attach_word", p.attach_word},
                              {"attach_side", p.attach_side == AttachSide::kBeforeWord
                                                  ? "before-word"
                                                  : "after-word"}});
  }
  std::cout << json.dump(2) << '\n';
  return 0;
}

int presets_cmd() {
  for (const auto id : kPresetIds) {
    const OperatorSet op = make_preset(id);
    std::cout << id << "\t";
    if (const auto* c = std::get_if<CharMutationSpec>(&op.spec)) {
      std::cout << "swap '" << unicode::encode(c->target) << "' -> '" << c->replacement
                << "' in " << c->scope.name() << " (" << c->scope.size() << ")";
    } else {
      const auto& w = std::get<WordMutationSpec>(op.spec);
      std::cout << "remove " << w.scope->name() << " (" << w.scope->size() << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args, int depth);

int rerun_cmd(const std::string& path, int depth) {
  if (depth > 0) throw Error(ErrorKind::kConfig, "rerun manifests cannot nest");
  const RunManifest manifest = read_manifest(path);
  if (manifest.argv.empty() || manifest.argv.front() != manifest.command) {
    throw Error(ErrorKind::kSchema, path + ": argv does not start with the command");
  }
  return dispatch(manifest.argv, depth + 1);
}

int dispatch(const std::vector<std::string>& args, int depth) {
  CLI::App app{"advtext: mutation-based adversarial text toolkit", "advtext"};
  app.set_version_flag("--version", std::string(ADVTEXT_VERSION));
  app.require_subcommand(1);

  ImportOptions import_opt;
  auto* import_app = app.add_subcommand("import-coco", "Import COCO caption files as labeled samples");
  import_app->add_option("--human", import_opt.human, "COCO captions JSON with human captions");
  import_app->add_option("--machine", import_opt.machine, "COCO captions JSON with machine captions");
  import_app->add_option("-o,--output", import_opt.output, "Output dataset JSONL")->required();

  SplitOptions split_opt;
  auto* split_app = app.add_subcommand("split", "Split a dataset by group (image) into train/val/test");
  split_app->add_option("input", split_opt.input, "Dataset JSONL")->required();
  split_app->add_option("--ratios", split_opt.ratios, "train:val:test, e.g. 70:15:15 or 0.7,0.15,0.15")
      ->capture_default_str();
  split_app->add_option("--seed", split_opt.seed, "Shuffle seed")->required();
  split_app->add_option("--out-dir", split_opt.out_dir, "Directory for train/val/test.jsonl")->required();

  MutateOptions mutate_opt;
  auto* mutate_app = app.add_subcommand("mutate", "Apply an operator preset to a dataset");
  mutate_app->add_option("input", mutate_opt.input, "Dataset JSONL")->required();
  mutate_app->add_option("--op", mutate_opt.op, "Preset id (see 'presets')")->required();
  mutate_app->add_option("--filter", mutate_opt.filter, "human, machine or all")->capture_default_str();
  mutate_app->add_option("-o,--output", mutate_opt.output, "Output dataset JSONL")->required();
  mutate_app->add_option("--threads", mutate_opt.threads, "Worker threads (0 = all cores)");
  mutate_app->add_option("--articles", mutate_opt.lexicons.articles, "Article lexicon file");
  mutate_app->add_option("--adjectives", mutate_opt.lexicons.adjectives, "Adjective lexicon file");
  mutate_app->add_option("--adverbs", mutate_opt.lexicons.adverbs, "Adverb lexicon file");

  AugmentOptions augment_opt;
  auto* augment_app = app.add_subcommand("augment", "Random Removing augmentation");
  augment_app->add_option("input", augment_opt.input, "Dataset JSONL")->required();
  augment_app->add_option("--seed", augment_opt.seed, "Augmentation seed")->required();
  augment_app->add_option("-o,--output", augment_opt.output, "Output dataset JSONL")->required();
  augment_app->add_option("--provenance", augment_opt.provenance,
                          "Sidecar JSONL (default <output>.provenance.jsonl)");
  augment_app->add_option("--cap", augment_opt.cap, "Max removed fraction of words")->capture_default_str();
  augment_app->add_option("--prob", augment_opt.probability, "Probability a sample is touched")
      ->capture_default_str();
  augment_app->add_option("--threads", augment_opt.threads, "Worker threads (0 = all cores)");

  ScoreOptions score_opt;
  auto* score_app = app.add_subcommand("score", "Score a dataset with an external detector");
  score_app->add_option("input", score_opt.input, "Dataset JSONL")->required();
  score_app->add_option("-o,--output", score_opt.output, "Score records JSONL")->required();
  score_app->add_option("--transport", score_opt.transport, "auto, mock, stdio or http")->capture_default_str();
  score_app->add_option("--scorer-cmd", score_opt.scorer_cmd, "Shell command speaking protocol v1 on stdio");
  score_app->add_option("--endpoint", score_opt.endpoint,
                        std::string("http://host:port of a scorer (default $") + kEndpointEnv + ")");
  score_app->add_option("--timeout-ms", score_opt.timeout_ms, "Per-batch timeout")->capture_default_str();
  score_app->add_option("--batch-size", score_opt.batch_size, "Samples per batch (0 = one batch)")
      ->capture_default_str();

  EvaluateOptions eval_opt;
  auto* eval_app = app.add_subcommand("evaluate", "AUC/ACC/F1 per classification task");
  eval_app->add_option("--baseline", eval_opt.baseline, "Scores of the unmutated human+machine set")->required();
  eval_app->add_option("--human", eval_opt.human, "Separate human score file (overrides baseline humans)");
  eval_app->add_option("--mutated", eval_opt.mutated, "PRESET=scores.jsonl, repeatable");
  eval_app->add_option("-o,--output", eval_opt.output, "Report JSON")->required();
  eval_app->add_option("--table", eval_opt.table, "Also write the text table here");
  eval_app->add_option("--roc", eval_opt.roc, "Export ROC points as JSONL");
  eval_app->add_option("--threshold", eval_opt.threshold, "Score >= threshold predicts machine")
      ->capture_default_str();
  eval_app->add_flag("--split-letters", eval_opt.split_letters,
                     "Report mcX-a and mcX-e as separate tasks");

  int mock_port = 0;
  std::string mock_host = "127.0.0.1";
  auto* mock_app = app.add_subcommand("mock-scorer", "Deterministic protocol v1 scorer (stdio or HTTP)");
  mock_app->add_option("--http", mock_port, "Serve POST /score on this port instead of stdio");
  mock_app->add_option("--host", mock_host, "HTTP bind address")->capture_default_str();

  auto* presets_app = app.add_subcommand("presets", "List operator presets");

  std::string token_text;
  auto* tokenize_app = app.add_subcommand("tokenize", "Show the word/punctuation decomposition of a text");
  tokenize_app->add_option("text", token_text, "Text")->required();

  std::string manifest_path;
  auto* rerun_app = app.add_subcommand("rerun", "Re-execute the command recorded in a manifest");
  rerun_app->add_option("manifest", manifest_path, "*.manifest.json")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (*import_app) return import_coco_cmd(import_opt, args);
  if (*split_app) return split_cmd(split_opt, args);
  if (*mutate_app) return mutate_cmd(mutate_opt, args);
  if (*augment_app) return augment_cmd(augment_opt, args);
  if (*score_app) return score_cmd(score_opt, args);
  if (*eval_app) return evaluate_cmd(eval_opt, args);
  if (*mock_app) return mock_scorer_cmd(mock_port, mock_host);
  if (*presets_app) return presets_cmd();
  if (*tokenize_app) return tokenize_cmd(token_text);
  if (*rerun_app) return rerun_cmd(manifest_path, depth);
  return 3;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  try {
    return dispatch(args, 0);
  } catch (const Error& e) {
    std::cerr << "advtext: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "advtext: io-error: " << e.what() << "\n";
    return exit_code(ErrorKind::kIo);
  }
}

}  // namespace advtext::cli
