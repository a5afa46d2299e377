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
#ifndef ADVTEXT_MANIFEST_HPP_
#define ADVTEXT_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace advtext {

// Reproducibility record written next to every CLI output. Contains no
// timestamps or host data, so reruns produce identical manifests.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;  // arguments after the program name
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> operators;
  std::vector<std::uint64_t> seeds;
  nlohmann::ordered_json transport;  // null when unused
  std::string tool_version = ADVTEXT_VERSION;

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::json& json);
};

// Sidecar path for an output file: "<output>.manifest.json".
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace advtext

#endif  // ADVTEXT_MANIFEST_HPP_
