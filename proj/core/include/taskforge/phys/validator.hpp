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

#ifndef TASKFORGE_PHYS_VALIDATOR_HPP_
#define TASKFORGE_PHYS_VALIDATOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taskforge/phys/spawner.hpp"

namespace taskforge::phys {

struct SubgoalVerdict {
  bool feasible = false;
  int attempts = 0;
  FailureKind failure = FailureKind::kNone;
  std::string detail;
  std::optional<SceneState> scene;
  bool evaluated = true;  // false when skipped by short-circuiting
};

/// One verdict per state of the task; states[0] is the initial scene.
struct ViabilityReport {
  std::vector<SubgoalVerdict> subgoals;

  bool feasible() const;
  std::optional<std::size_t> first_failure() const;
  int total_attempts() const;
};

/// Throws ConfigError if any entity class lacks a shape or any fact's
/// predicate lacks a spawn rule, before spawning anything.
void check_physics_config(const DomainDefinition& dom, const TaskSpec& task,
                          const PhysicsSetup& setup);

/// Spawns every state of the task. State i draws from
/// Rng(derive_seed(seed, i)), so verdicts are independent of evaluation
/// order and of short-circuiting.
ViabilityReport validate_task(const DomainDefinition& dom, const TaskSpec& task,
                              const PhysicsSetup& setup, std::uint64_t seed);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_VALIDATOR_HPP_
