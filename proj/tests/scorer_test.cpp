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
#include "advtext/scorer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "advtext/error.hpp"
#include "httplib.h"
#include "test_support.hpp"

namespace advtext {
namespace {

using namespace std::chrono_literals;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no advtext::Error thrown";
  return ErrorKind::kConfig;
}

std::vector<ScoreRequest> requests(std::size_t n) {
  std::vector<ScoreRequest> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"r" + std::to_string(i), "caption number " + std::to_string(i)});
  }
  return out;
}

TEST(Protocol, RequestRoundTrip) {
  const ScoreRequest r{"a\"1", "line\nbreak \xCE\xB1"};
  const std::string line = encode_request(r);
  EXPECT_EQ(line.back(), '\n');
  EXPECT_EQ(std::count(line.begin(), line.end(), '\n'), 1);
  const ScoreRequest back = decode_request(line);
  EXPECT_EQ(back.id, r.id);
  EXPECT_EQ(back.text, r.text);
}

TEST(Protocol, ResponseRoundTrip) {
  const ScoreResponse r{"x", 0.123456789012345678};
  EXPECT_EQ(decode_response(encode_response(r)), r);
  EXPECT_EQ(decode_response(R"({"id":"x","score":1})").score, 1.0);
  EXPECT_EQ(decode_response(R"({"id":"x","score":0})").score, 0.0);
}

TEST(Protocol, MalformedResponses) {
  EXPECT_EQ(kind_of([] { decode_response("not json"); }), ErrorKind::kProtocol);
  EXPECT_EQ(kind_of([] { decode_response("[1,2]"); }), ErrorKind::kProtocol);
  EXPECT_EQ(kind_of([] { decode_response(R"({"score":0.5})"); }), ErrorKind::kProtocol);
  EXPECT_EQ(kind_of([] { decode_response(R"({"id":"a","score":"0.5"})"); }),
            ErrorKind::kProtocol);
}

TEST(Protocol, OutOfRangeScoreNamesId) {
  try {
    decode_response(R"({"id":"cap-17","score":1.5})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRange);
    EXPECT_NE(std::string(e.what()).find("cap-17"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { decode_response(R"({"id":"a","score":-0.01})"); }),
            ErrorKind::kRange);
}

TEST(Matching, ReordersToRequestOrder) {
  const auto reqs = requests(3);
  const auto out = match_responses(reqs, {{"r2", 0.2}, {"r0", 0.0}, {"r1", 0.1}});
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(out[i].id, reqs[i].id);
}

TEST(Matching, MissingIdsReported) {
  const auto reqs = requests(3);
  try {
    match_responses(reqs, {{"r0", 0.5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTimeout);
    EXPECT_NE(std::string(e.what()).find("r1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("r2"), std::string::npos);
  }
}

TEST(Matching, UnknownAndDuplicateIds) {
  const auto reqs = requests(2);
  EXPECT_EQ(kind_of([&] { match_responses(reqs, {{"r0", .1}, {"r1", .1}, {"zz", .1}}); }),
            ErrorKind::kProtocol);
  EXPECT_EQ(kind_of([&] { match_responses(reqs, {{"r0", .1}, {"r0", .2}, {"r1", .1}}); }),
            ErrorKind::kProtocol);
}

TEST(MockScore, DeterministicAndInRange) {
  EXPECT_EQ(mock_score(""), 0.5);
  EXPECT_EQ(mock_score("a cat"), mock_score("a cat"));
  EXPECT_NE(mock_score("a cat"), mock_score("a cat."));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double s = mock_score(testing::random_unicode(rng, 40));
    ASSERT_GE(s, 0.0);
    ASSERT_LT(s, 1.0);
  }
}

TEST(MockScore, ApproximatelyUniform) {
  std::mt19937_64 rng(12);
  std::vector<double> scores;
  std::set<std::string> seen;
  while (scores.size() < 10000) {
    std::string text = testing::random_caption(rng) + " " + std::to_string(rng());
    if (seen.insert(text).second) scores.push_back(mock_score(text));
  }
  std::sort(scores.begin(), scores.end());
  double d = 0.0;  // Kolmogorov-Smirnov statistic against U(0,1)
  const double n = static_cast<double>(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    d = std::max({d, (i + 1) / n - scores[i], scores[i] - i / n});
  }
  EXPECT_LT(d, 1.63 / std::sqrt(n));
}

TEST(MockScore, ServeMockAnswersEveryLine) {
  std::istringstream in(encode_request({"a", "x"}) + "\n" + encode_request({"b", ""}));
  std::ostringstream out;
  serve_mock(in, out);
  std::istringstream lines(out.str());
  std::string line;
  std::vector<ScoreResponse> got;
  while (std::getline(lines, line)) got.push_back(decode_response(line));
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0], (ScoreResponse{"a", mock_score("x")}));
  EXPECT_EQ(got[1], (ScoreResponse{"b", 0.5}));
}

TEST(Transport, MockTransportBatch) {
  MockTransport mock;
  const auto reqs = requests(50);
  const auto out = score_batch(reqs, mock);
  ASSERT_EQ(out.size(), 50u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_EQ(out[i].score, mock_score(reqs[i].text));
  }
}

TEST(Transport, StdioAgainstCliMockScorer) {
  StdioTransport stdio(std::string("'") + ADVTEXT_CLI + "' mock-scorer", 20s);
  MockTransport mock;
  const auto reqs = requests(500);
  EXPECT_EQ(score_batch(reqs, stdio), score_batch(reqs, mock));
}

TEST(Transport, StdioShuffledResponsesAreMatched) {
  StdioTransport stdio(
      "cat >/dev/null; printf '%s\n' '{\"id\":\"r1\",\"score\":0.25}' "
      "'{\"id\":\"r0\",\"score\":0.75}'",
      10s);
  const auto out = score_batch(requests(2), stdio);
  EXPECT_EQ(out[0], (ScoreResponse{"r0", 0.75}));
  EXPECT_EQ(out[1], (ScoreResponse{"r1", 0.25}));
}

TEST(Transport, StdioFailures) {
  const auto reqs = requests(3);
  StdioTransport failing("cat >/dev/null; exit 7", 10s);
  EXPECT_EQ(kind_of([&] { score_batch(reqs, failing); }), ErrorKind::kTransport);
  StdioTransport silent("cat >/dev/null", 10s);
  EXPECT_EQ(kind_of([&] { score_batch(reqs, silent); }), ErrorKind::kTimeout);
  StdioTransport garbage("cat >/dev/null; echo hello", 10s);
  EXPECT_EQ(kind_of([&] { score_batch(reqs, garbage); }), ErrorKind::kProtocol);
  StdioTransport range(
      "cat >/dev/null; echo '{\"id\":\"r0\",\"score\":2}'", 10s);
  EXPECT_EQ(kind_of([&] { score_batch(reqs, range); }), ErrorKind::kRange);
}

TEST(Transport, StdioDeadline) {
  StdioTransport slow("sleep 30", 300ms);
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(kind_of([&] { score_batch(requests(1), slow); }), ErrorKind::kTimeout);
  EXPECT_LT(std::chrono::steady_clock::now() - start, 10s);
}

class HttpScorer : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/score", [](const httplib::Request& req, httplib::Response& res) {
      std::istringstream in(req.body);
      std::ostringstream out;
      serve_mock(in, out);
      res.set_content(out.str(), "application/x-ndjson");
    });
    server_.Post("/broken/score", [](const httplib::Request&, httplib::Response& res) {
      res.status = 500;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }
  std::string endpoint(const std::string& prefix = "") const {
    return "http://127.0.0.1:" + std::to_string(port_) + prefix;
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpScorer, MatchesMock) {
  HttpTransport http(endpoint(), 10s);
  MockTransport mock;
  const auto reqs = requests(300);
  EXPECT_EQ(score_batch(reqs, http), score_batch(reqs, mock));
}

TEST_F(HttpScorer, ServerErrorIsTransportFailure) {
  HttpTransport http(endpoint("/broken"), 10s);
  EXPECT_EQ(kind_of([&] { score_batch(requests(2), http); }), ErrorKind::kTransport);
}

TEST(Http, UnreachableEndpoint) {
  httplib::Server probe;
  const int port = probe.bind_to_any_port("127.0.0.1");
  probe.stop();  // port now closed
  HttpTransport http("http://127.0.0.1:" + std::to_string(port), 2s);
  const ErrorKind kind = kind_of([&] { score_batch(requests(1), http); });
  EXPECT_TRUE(kind == ErrorKind::kTransport || kind == ErrorKind::kTimeout);
}

TEST(Http, BadEndpointIsConfigError) {
  HttpTransport http("ftp://example", 1s);
  EXPECT_EQ(kind_of([&] { score_batch(requests(1), http); }), ErrorKind::kConfig);
}

TEST(ScoreLines, RoundTrip) {
  const ScoreRecord r{"id-1", 0.3, Label::kMachine};
  const std::string line = format_score_line(r);
  EXPECT_EQ(parse_score_line(line, "x", 1), r);
  EXPECT_EQ(kind_of([] { parse_score_line(R"({"id":"a","score":3,"label":"human"})", "f", 2); }),
            ErrorKind::kRange);
  EXPECT_EQ(kind_of([] { parse_score_line(R"({"id":"a","score":0.1,"label":"bot"})", "f", 2); }),
            ErrorKind::kSchema);
}

}  // namespace
}  // namespace advtext
