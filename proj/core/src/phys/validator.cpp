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

#include "taskforge/phys/validator.hpp"

#include <numeric>

#include "taskforge/errors.hpp"

namespace taskforge::phys {

bool ViabilityReport::feasible() const {
  for (const auto& s : subgoals) {
    if (!s.feasible) return false;
  }
  return !subgoals.empty();
}

std::optional<std::size_t> ViabilityReport::first_failure() const {
  for (std::size_t i = 0; i < subgoals.size(); ++i) {
    if (subgoals[i].evaluated && !subgoals[i].feasible) return i;
  }
  return std::nullopt;
}

int ViabilityReport::total_attempts() const {
  return std::accumulate(subgoals.begin(), subgoals.end(), 0,
                         [](int acc, const SubgoalVerdict& s) { return acc + s.attempts; });
}

void check_physics_config(const DomainDefinition& dom, const TaskSpec& task,
                          const PhysicsSetup& setup) {
  for (const auto& state : task.states) build_constraints(dom, state, setup);
  if (setup.max_attempts < 1) throw ConfigError("max_attempts must be at least 1");
}

ViabilityReport validate_task(const DomainDefinition& dom, const TaskSpec& task,
                              const PhysicsSetup& setup, std::uint64_t seed) {
  check_physics_config(dom, task, setup);
  ViabilityReport report;
  bool failed = false;
  for (std::size_t i = 0; i < task.states.size(); ++i) {
    SubgoalVerdict v;
    if (failed && setup.short_circuit) {
      v.evaluated = false;
      v.detail = "skipped";
      report.subgoals.push_back(std::move(v));
      continue;
    }
    Rng rng(derive_seed(seed, i));
    auto out = spawn_scene(dom, task.states[i], setup, rng);
    v.feasible = out.feasible();
    v.attempts = out.attempts;
    v.failure = out.failure;
    v.detail = std::move(out.detail);
    v.scene = std::move(out.scene);
    failed = failed || !v.feasible;
    report.subgoals.push_back(std::move(v));
  }
  return report;
}

}  // namespace taskforge::phys
