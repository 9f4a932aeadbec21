// Copyright 2026 The Taskforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TASKFORGE_CLI_COMMANDS_HPP_
#define TASKFORGE_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "taskforge/cli/inputs.hpp"

namespace taskforge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitExhausted = 3,
  kExitValidation = 4,
};

std::string_view tool_version();

struct GenerateOptions {
  InputPaths inputs;
  std::size_t n = 100;
  std::size_t len_min = 3;
  std::size_t len_max = 6;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  int max_attempts = 200;
  std::size_t max_entities = 6;
  /// Task attempts allowed before giving up; 0 means 50 * n + 100.
  std::size_t budget = 0;
  double lambda = 0.0;
};

/// Writes `out` (JSON lines) and `out`.manifest.json. Returns an ExitCode.
int cmd_generate(const GenerateOptions& opts, std::ostream& log);

struct CountOptions {
  InputPaths inputs;
  std::size_t length = 1;
  bool oracle = false;
  std::size_t max_entities = 3;
  double ceiling = 5.0e7;
};

int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& log);

struct ValidateOptions {
  InputPaths inputs;
  std::string dataset;
  unsigned workers = 1;
};

/// Re-runs symbolic and physical checks on every record.
int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& log);

struct SimilarityOptions {
  std::string dataset;
  std::string out;  // "-" for stdout
  unsigned workers = 1;
  double seq_weight = 0.5;
};

/// Tab-separated matrix: a header row of task ids, then one row per task
/// starting with its id.
int cmd_similarity(const SimilarityOptions& opts, std::ostream& out, std::ostream& log);

}  // namespace taskforge::cli

#endif  // TASKFORGE_CLI_COMMANDS_HPP_
