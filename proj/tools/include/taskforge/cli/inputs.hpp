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

#ifndef TASKFORGE_CLI_INPUTS_HPP_
#define TASKFORGE_CLI_INPUTS_HPP_

#include <map>
#include <optional>
#include <string>

#include "taskforge/gen/weights.hpp"
#include "taskforge/model/domain.hpp"
#include "taskforge/phys/setup.hpp"

namespace taskforge::cli {

/// Environment variable naming a directory with default config files
/// domain.pddl, weights.cfg, shapes.cfg and rules.cfg.
inline constexpr const char* kConfigDirEnv = "TASKFORGE_CONFIG_DIR";

struct InputPaths {
  std::optional<std::string> domain;
  std::optional<std::string> weights;
  std::optional<std::string> shapes;
  std::optional<std::string> rules;
};

/// Fills unset paths from $TASKFORGE_CONFIG_DIR, or from the bundled
/// pick-and-place config when the variable is unset. A weights file that
/// does not exist in the default directory is left unset (uniform).
InputPaths resolve_paths(const InputPaths& given);

struct LoadedInputs {
  InputPaths paths;
  DomainDefinition domain;
  ResolvedWeights weights;
  std::optional<phys::PhysicsSetup> physics;  // when shapes and rules are set
  std::map<std::string, std::string> hashes;  // kind -> SHA-256 of file bytes
};

/// Parses and validates everything. Diagnostics go to `log`; any error
/// throws ConfigError. `need_physics` makes shapes and rules mandatory.
LoadedInputs load_inputs(const InputPaths& paths, bool need_physics, std::ostream& log);

std::string read_file(const std::string& path);

}  // namespace taskforge::cli

#endif  // TASKFORGE_CLI_INPUTS_HPP_
