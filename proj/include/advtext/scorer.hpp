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
#ifndef ADVTEXT_SCORER_HPP_
#define ADVTEXT_SCORER_HPP_

#include <chrono>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/dataset.hpp"
#include "advtext/metrics.hpp"

namespace advtext {

// Scorer protocol v1. One JSON object per line, UTF-8:
//   request  {"id":"...","text":"..."}\n
//   response {"id":"...","score":<number in [0,1]>}\n
struct ScoreRequest {
  std::string id;
  std::string text;
};

struct ScoreResponse {
  std::string id;
  double score = 0.0;

  bool operator==(const ScoreResponse&) const = default;
};

std::string encode_request(const ScoreRequest& request);
std::string encode_response(const ScoreResponse& response);
ScoreRequest decode_request(std::string_view line);
// Throws Error(kProtocol) for malformed lines and Error(kRange) for a score
// outside [0,1] (the message names the id).
ScoreResponse decode_response(std::string_view line);

// Pairs responses with requests: output follows request order. Unknown or
// duplicate ids are protocol errors; missing ids raise Error(kTimeout) with
// the ids listed.
std::vector<ScoreResponse> match_responses(
    std::span<const ScoreRequest> requests,
    std::vector<ScoreResponse> responses);

// Deterministic test double: FNV-1a over the UTF-8 bytes, finalized with
// SplitMix64, top 53 bits scaled to [0,1). Empty text scores 0.5.
double mock_score(std::string_view text);

// Answers a request stream (until EOF) with mock scores.
void serve_mock(std::istream& in, std::ostream& out);

class Transport {
 public:
  virtual ~Transport() = default;
  // Sends one batch and returns the raw response lines.
  virtual std::vector<std::string> exchange(
      std::span<const ScoreRequest> requests) = 0;
  virtual std::string describe() const = 0;
};

// In-process mock scorer.
class MockTransport : public Transport {
 public:
  std::vector<std::string> exchange(
      std::span<const ScoreRequest> requests) override;
  std::string describe() const override { return "mock"; }
};

// Spawns `/bin/sh -c command` per batch, streams requests to its stdin,
// closes it, and reads responses from stdout until EOF or the deadline.
class StdioTransport : public Transport {
 public:
  StdioTransport(std::string command, std::chrono::milliseconds timeout);
  std::vector<std::string> exchange(
      std::span<const ScoreRequest> requests) override;
  std::string describe() const override { return "stdio:" + command_; }

 private:
  std::string command_;
  std::chrono::milliseconds timeout_;
};

// POSTs the JSONL batch to <endpoint>/score. `endpoint` is
// http://host[:port][/prefix].
class HttpTransport : public Transport {
 public:
  HttpTransport(std::string endpoint, std::chrono::milliseconds timeout);
  std::vector<std::string> exchange(
      std::span<const ScoreRequest> requests) override;
  std::string describe() const override { return "http:" + endpoint_; }

 private:
  std::string endpoint_;
  std::chrono::milliseconds timeout_;
};

// Scores one batch: validates, decodes and id-matches the transport output.
std::vector<ScoreResponse> score_batch(std::span<const ScoreRequest> requests,
                                       Transport& transport);

// ScoreRecord JSONL: {"id":"...","score":...,"label":"human|machine"}.
std::string format_score_line(const ScoreRecord& record);
ScoreRecord parse_score_line(std::string_view line, std::string_view origin,
                             std::size_t line_no);
std::vector<ScoreRecord> read_scores(const std::filesystem::path& path);

}  // namespace advtext

#endif  // ADVTEXT_SCORER_HPP_
