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

#ifndef TASKFORGE_PHYS_SPAWNER_HPP_
#define TASKFORGE_PHYS_SPAWNER_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "taskforge/gen/rng.hpp"
#include "taskforge/phys/constraints.hpp"

namespace taskforge::phys {

enum class FailureKind {
  kNone,
  kEmptyVolume,        // provably infeasible: constraints have no solution
  kCollision,          // provably infeasible: entities with forced poses overlap
  kUnreachable,        // provably infeasible: an entity's whole volume is out of reach
  kAttemptsExhausted,  // sampling gave up; probably but not provably infeasible
};

std::string_view failure_name(FailureKind kind);
bool parse_failure(std::string_view name, FailureKind& out);

/// Region the entity's center may occupy given the state's facts and the
/// entities already placed in `placed`. EMPTY when the facts contradict.
Aabb volume_for_entity(const ConstraintSystem& cs, const Envelope& env, EntityId entity,
                       const SceneState& placed, const PhysicsSetup& setup);

/// Convenience overload that builds the constraint system itself.
Aabb volume_for_entity(const DomainDefinition& dom, const WorldState& state, EntityId entity,
                       const SceneState& placed, const PhysicsSetup& setup);

struct SpawnOutcome {
  std::optional<SceneState> scene;
  FailureKind failure = FailureKind::kNone;
  int attempts = 0;
  std::string detail;

  bool feasible() const { return scene.has_value(); }
};

/// Places every entity of `state`, or reports why it cannot. Deterministic
/// for a given rng state. Uses setup.max_attempts whole-scene attempts.
SpawnOutcome spawn_scene(const DomainDefinition& dom, const WorldState& state,
                         const PhysicsSetup& setup, Rng& rng);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_SPAWNER_HPP_
