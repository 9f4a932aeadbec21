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

#include <ostream>

#include "taskforge/cli/commands.hpp"
#include "taskforge/gen/enumerate.hpp"

namespace taskforge::cli {

int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& log) {
  LoadedInputs in;
  try {
    InputPaths paths = opts.inputs;
    if (!paths.domain) paths = resolve_paths(paths);
    paths.shapes.reset();
    paths.rules.reset();
    paths.weights.reset();
    in = load_inputs(paths, false, log);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  out << "actions " << in.domain.actions.size() << '\n';
  out << "length " << opts.length << '\n';
  out << "unconstrained " << count_unconstrained(in.domain.actions.size(), opts.length) << '\n';
  if (!opts.oracle) return kExitOk;
  try {
    const auto valid =
        enumerate_valid_sequences(in.domain, opts.length, opts.max_entities, {}, opts.ceiling);
    out << "valid " << valid << '\n';
  } catch (const OracleRefused& e) {
    log << "error: " << e.what() << '\n';
    out << "valid refused (estimated " << e.estimate() << " search nodes)\n";
    return kExitExhausted;
  }
  return kExitOk;
}

}  // namespace taskforge::cli
