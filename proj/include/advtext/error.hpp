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
#ifndef ADVTEXT_ERROR_HPP_
#define ADVTEXT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace advtext {

enum class ErrorKind {
  kIo,
  kSchema,
  kFormat,
  kDegenerateClasses,
  kEmptyInput,
  kUnknownPreset,
  kInvalidRatios,
  kConfig,
  kTransport,
  kTimeout,
  kProtocol,
  kRange,
};

std::string_view to_string(ErrorKind kind);

// Process exit code for a failure of this kind: 2 data, 3 config, 4 transport.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace advtext

#endif  // ADVTEXT_ERROR_HPP_
