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
#ifndef ADVTEXT_TOOLS_COMMANDS_HPP_
#define ADVTEXT_TOOLS_COMMANDS_HPP_

#include <string>
#include <vector>

namespace advtext::cli {

// Runs the command line (arguments after the program name) and returns the
// process exit code: 0 ok, 2 data error, 3 config error, 4 transport error.
int run(const std::vector<std::string>& args);

}  // namespace advtext::cli

#endif  // ADVTEXT_TOOLS_COMMANDS_HPP_
