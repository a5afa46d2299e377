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

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <unordered_map>

#include "advtext/error.hpp"
#include "advtext/random.hpp"
#include "httplib.h"
#include "json.hpp"

namespace advtext {

using nlohmann::ordered_json;

std::string encode_request(const ScoreRequest& request) {
  ordered_json line;
  line["id"] = request.id;
  line["text"] = request.text;
  return line.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

std::string encode_response(const ScoreResponse& response) {
  ordered_json line;
  line["id"] = response.id;
  line["score"] = response.score;
  return line.dump() + "\n";
}

namespace {

ordered_json parse_object(std::string_view line) {
  ordered_json object;
  try {
    object = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kProtocol,
                "malformed protocol line '" + std::string(line.substr(0, 200)) +
                    "': " + e.what());
  }
  if (!object.is_object()) {
    throw Error(ErrorKind::kProtocol, "protocol line is not a JSON object: '" +
                                          std::string(line.substr(0, 200)) + "'");
  }
  return object;
}

std::string string_field(const ordered_json& object, const char* field,
                         std::string_view line) {
  const auto it = object.find(field);
  if (it == object.end() || !it->is_string()) {
    throw Error(ErrorKind::kProtocol,
                std::string("protocol line lacks string field '") + field +
                    "': '" + std::string(line.substr(0, 200)) + "'");
  }
  return it->get<std::string>();
}

}  // namespace

ScoreRequest decode_request(std::string_view line) {
  const ordered_json object = parse_object(line);
  return {string_field(object, "id", line), string_field(object, "text", line)};
}

ScoreResponse decode_response(std::string_view line) {
  const ordered_json object = parse_object(line);
  ScoreResponse response;
  response.id = string_field(object, "id", line);
  const auto it = object.find("score");
  if (it == object.end() || !it->is_number()) {
    throw Error(ErrorKind::kProtocol,
                "response for id '" + response.id + "' lacks numeric 'score'");
  }
  response.score = it->get<double>();
  if (!(response.score >= 0.0 && response.score <= 1.0)) {
    throw Error(ErrorKind::kRange, "score " + it->dump() + " for id '" +
                                       response.id + "' is outside [0, 1]");
  }
  return response;
}

std::vector<ScoreResponse> match_responses(
    std::span<const ScoreRequest> requests,
    std::vector<ScoreResponse> responses) {
  std::unordered_map<std::string, std::size_t> slot;
  slot.reserve(requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (!slot.emplace(requests[i].id, i).second) {
      throw Error(ErrorKind::kProtocol,
                  "duplicate request id '" + requests[i].id + "' in batch");
    }
  }
  std::vector<ScoreResponse> ordered(requests.size());
  std::vector<bool> filled(requests.size(), false);
  for (auto& response : responses) {
    const auto it = slot.find(response.id);
    if (it == slot.end()) {
      throw Error(ErrorKind::kProtocol,
                  "response for unknown id '" + response.id + "'");
    }
    if (filled[it->second]) {
      throw Error(ErrorKind::kProtocol,
                  "duplicate response for id '" + response.id + "'");
    }
    filled[it->second] = true;
    ordered[it->second] = std::move(response);
  }
  std::string missing;
  std::size_t missing_count = 0;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (filled[i]) continue;
    if (++missing_count <= 20) {
      if (!missing.empty()) missing += ", ";
      missing += requests[i].id;
    }
  }
  if (missing_count > 0) {
    if (missing_count > 20) {
      missing += ", ... (" + std::to_string(missing_count) + " total)";
    }
    throw Error(ErrorKind::kTimeout, "no response for ids: " + missing);
  }
  return ordered;
}

double mock_score(std::string_view text) {
  if (text.empty()) return 0.5;
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return static_cast<double>(splitmix64(hash) >> 11) * 0x1.0p-53;
}

void serve_mock(std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const ScoreRequest request = decode_request(line);
    out << encode_response({request.id, mock_score(request.text)});
  }
  out.flush();
}

std::vector<std::string> MockTransport::exchange(
    std::span<const ScoreRequest> requests) {
  std::vector<std::string> lines;
  lines.reserve(requests.size());
  for (const auto& r : requests) {
    std::string line = encode_response({r.id, mock_score(r.text)});
    line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

namespace {

std::vector<std::string> split_lines(std::string_view body) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find('\n', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string line(body.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::string join_requests(std::span<const ScoreRequest> requests) {
  std::string body;
  for (const auto& r : requests) body += encode_request(r);
  return body;
}

class Pipe {
 public:
  Pipe() {
    if (::pipe2(fds_, O_CLOEXEC) != 0) {
      throw Error(ErrorKind::kTransport,
                  std::string("pipe failed: ") + std::strerror(errno));
    }
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  Pipe(const Pipe&) = delete;
  Pipe& operator=(const Pipe&) = delete;

  int read_end() const { return fds_[0]; }
  int write_end() const { return fds_[1]; }
  void close_read() { close_fd(fds_[0]); }
  void close_write() { close_fd(fds_[1]); }

 private:
  static void close_fd(int& fd) {
    if (fd >= 0) ::close(fd);
    fd = -1;
  }
  int fds_[2] = {-1, -1};
};

}  // namespace

StdioTransport::StdioTransport(std::string command,
                               std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {
  // A scorer that exits early must surface as an error, not kill us.
  static const bool ignored = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)ignored;
}

std::vector<std::string> StdioTransport::exchange(
    std::span<const ScoreRequest> requests) {
  const std::string body = join_requests(requests);
  Pipe to_child;
  Pipe from_child;

  const pid_t pid = ::fork();
  if (pid < 0) {
    throw Error(ErrorKind::kTransport,
                std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(to_child.read_end(), STDIN_FILENO);
    ::dup2(from_child.write_end(), STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  to_child.close_read();
  from_child.close_write();
  ::fcntl(to_child.write_end(), F_SETFL, O_NONBLOCK);
  ::fcntl(from_child.read_end(), F_SETFL, O_NONBLOCK);

  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  std::size_t written = 0;
  if (body.empty()) to_child.close_write();
  std::string output;
  bool eof = false;
  bool timed_out = false;
  char buffer[65536];

  while (!eof) {
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      timed_out = true;
      break;
    }
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {from_child.read_end(), POLLIN, 0};
    if (to_child.write_end() >= 0) fds[count++] = {to_child.write_end(), POLLOUT, 0};
    const auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
    const int ready = ::poll(fds, count, static_cast<int>(std::max<long long>(1, wait.count())));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (count == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(to_child.write_end(), body.data() + written,
                                body.size() - written);
      if (n > 0) written += static_cast<std::size_t>(n);
      if (n < 0 && errno != EAGAIN && errno != EINTR) written = body.size();
      if (written == body.size()) to_child.close_write();
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      const ssize_t n = ::read(from_child.read_end(), buffer, sizeof buffer);
      if (n > 0) {
        output.append(buffer, static_cast<std::size_t>(n));
      } else if (n == 0) {
        eof = true;
      } else if (errno != EAGAIN && errno != EINTR) {
        eof = true;
      }
    }
  }
  to_child.close_write();
  from_child.close_read();

  int status = 0;
  if (timed_out) {
    // Whole group: the shell may have forked the real scorer.
    ::kill(-pid, SIGKILL);
    ::waitpid(pid, &status, 0);
    std::vector<ScoreResponse> partial;
    for (const auto& line : split_lines(output)) {
      try {
        partial.push_back(decode_response(line));
      } catch (const Error&) {
      }
    }
    try {
      match_responses(requests, std::move(partial));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kTimeout) {
        throw Error(ErrorKind::kTimeout, "scorer timed out after " +
                                             std::to_string(timeout_.count()) +
                                             " ms; " + e.what());
      }
    }
    throw Error(ErrorKind::kTimeout, "scorer timed out after " +
                                         std::to_string(timeout_.count()) + " ms");
  }
  ::waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    throw Error(ErrorKind::kTransport, "scorer command '" + command_ +
                                           "' exited with status " +
                                           std::to_string(code));
  }
  return split_lines(output);
}

HttpTransport::HttpTransport(std::string endpoint,
                             std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {}

std::vector<std::string> HttpTransport::exchange(
    std::span<const ScoreRequest> requests) {
  static const std::regex pattern(R"(^http://([^/:]+)(?::(\d+))?(/.*)?$)");
  std::smatch match;
  if (!std::regex_match(endpoint_, match, pattern)) {
    throw Error(ErrorKind::kConfig, "unsupported scorer endpoint '" + endpoint_ +
                                        "' (expected http://host[:port][/path])");
  }
  const std::string host = match[1];
  const int port = match[2].matched ? std::stoi(match[2]) : 80;
  std::string path = match[3].matched ? std::string(match[3]) : std::string();
  while (!path.empty() && path.back() == '/') path.pop_back();
  path += "/score";

  httplib::Client client(host, port);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  const auto result = client.Post(path, join_requests(requests), "application/x-ndjson");
  if (!result) {
    const auto error = result.error();
    const ErrorKind kind = error == httplib::Error::ConnectionTimeout
                               ? ErrorKind::kTimeout
                               : ErrorKind::kTransport;
    throw Error(kind, "POST " + endpoint_ + path + " failed: " + httplib::to_string(error));
  }
  if (result->status != 200) {
    throw Error(ErrorKind::kTransport, "POST " + path + " returned HTTP " +
                                           std::to_string(result->status));
  }
  return split_lines(result->body);
}

std::vector<ScoreResponse> score_batch(std::span<const ScoreRequest> requests,
                                       Transport& transport) {
  if (requests.empty()) return {};
  std::vector<ScoreResponse> responses;
  for (const auto& line : transport.exchange(requests)) {
    responses.push_back(decode_response(line));
  }
  return match_responses(requests, std::move(responses));
}

std::string format_score_line(const ScoreRecord& record) {
  ordered_json line;
  line["id"] = record.id;
  line["score"] = record.score;
  line["label"] = std::string(to_string(record.label));
  return line.dump();
}

ScoreRecord parse_score_line(std::string_view line, std::string_view origin,
                             std::size_t line_no) {
  const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
  ordered_json object;
  try {
    object = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSchema, where + "invalid JSON: " + e.what());
  }
  if (!object.is_object() || !object.contains("id") || !object["id"].is_string() ||
      !object.contains("score") || !object["score"].is_number() ||
      !object.contains("label") || !object["label"].is_string()) {
    throw Error(ErrorKind::kSchema,
                where + "score record needs string id, numeric score and label");
  }
  ScoreRecord record;
  record.id = object["id"].get<std::string>();
  record.score = object["score"].get<double>();
  if (!(record.score >= 0.0 && record.score <= 1.0)) {
    throw Error(ErrorKind::kRange, where + "score for id '" + record.id +
                                       "' is outside [0, 1]");
  }
  const auto label = parse_label(object["label"].get<std::string>());
  if (!label) {
    throw Error(ErrorKind::kSchema, where + "label must be 'human' or 'machine'");
  }
  record.label = *label;
  return record;
}

std::vector<ScoreRecord> read_scores(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<ScoreRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    records.push_back(parse_score_line(line, path.string(), line_no));
  }
  return records;
}

}  // namespace advtext
