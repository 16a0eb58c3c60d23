// Copyright 2026 The catlower Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace catlower::cli {

/// Outcome of one command. `ok == false` maps to exit code 1.
struct RunReport {
  std::string command;
  bool ok = false;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> artifacts;
};

/// Runs `catlower <args...>` (program name excluded). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace catlower::cli
