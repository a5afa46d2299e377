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
#include "advtext/error.hpp"

namespace advtext {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return "io-error";
    case ErrorKind::kSchema: return "schema-error";
    case ErrorKind::kFormat: return "format-error";
    case ErrorKind::kDegenerateClasses: return "degenerate-classes";
    case ErrorKind::kEmptyInput: return "empty-input";
    case ErrorKind::kUnknownPreset: return "unknown-preset";
    case ErrorKind::kInvalidRatios: return "invalid-ratios";
    case ErrorKind::kConfig: return "config-error";
    case ErrorKind::kTransport: return "transport-error";
    case ErrorKind::kTimeout: return "timeout";
    case ErrorKind::kProtocol: return "protocol-error";
    case ErrorKind::kRange: return "range-error";
  }
  return "error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kSchema:
    case ErrorKind::kFormat:
    case ErrorKind::kDegenerateClasses:
    case ErrorKind::kEmptyInput:
      return 2;
    case ErrorKind::kUnknownPreset:
    case ErrorKind::kInvalidRatios:
    case ErrorKind::kConfig:
      return 3;
    case ErrorKind::kTransport:
    case ErrorKind::kTimeout:
    case ErrorKind::kProtocol:
    case ErrorKind::kRange:
      return 4;
  }
  return 1;
}

}  // namespace advtext
