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
#include "advtext/manifest.hpp"

#include <fstream>

#include "advtext/error.hpp"

namespace advtext {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json json;
  json["tool"] = "advtext";
  json["tool_version"] = tool_version;
  json["command"] = command;
  json["argv"] = argv;
  json["inputs"] = inputs;
  json["outputs"] = outputs;
  json["operators"] = operators;
  json["seeds"] = seeds;
  json["transport"] = transport;
  return json;
}

RunManifest RunManifest::from_json(const nlohmann::json& json) {
  RunManifest manifest;
  try {
    manifest.command = json.at("command").get<std::string>();
    manifest.argv = json.at("argv").get<std::vector<std::string>>();
    manifest.inputs = json.value("inputs", std::vector<std::string>{});
    manifest.outputs = json.value("outputs", std::vector<std::string>{});
    manifest.operators = json.value("operators", std::vector<std::string>{});
    manifest.seeds = json.value("seeds", std::vector<std::uint64_t>{});
    if (json.contains("transport")) manifest.transport = json["transport"];
    manifest.tool_version = json.value("tool_version", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("invalid manifest: ") + e.what());
  }
  return manifest;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  return std::filesystem::path(output.string() + ".manifest.json");
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << manifest.to_json().dump(2) << '\n';
  if (!out) throw Error(ErrorKind::kIo, "error writing " + path.string());
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSchema, path.string() + ": " + e.what());
  }
  return RunManifest::from_json(json);
}

}  // namespace advtext
