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

#ifndef TASKFORGE_DATA_REWARD_HPP_
#define TASKFORGE_DATA_REWARD_HPP_

#include <optional>
#include <vector>

#include "taskforge/data/record.hpp"

namespace taskforge::data {

/// Entity whose motion the step is about: the first argument of a spatial
/// fact the step adds (unless it is fixed), otherwise the first bound
/// parameter that is neither fixed nor a holder in an attach relation.
std::optional<EntityId> manipulated_entity(const DomainDefinition& dom, const TaskSpec& task,
                                           std::size_t step, const phys::PhysicsSetup& setup);

/// Scaffold per step. scenes[i] realizes task.states[i]; a step gets no
/// scaffold when its manipulated entity is unknown or its goal scene is
/// missing.
std::vector<std::optional<RewardScaffold>> reward_scaffold(
    const DomainDefinition& dom, const TaskSpec& task,
    const std::vector<std::optional<phys::SceneState>>& scenes,
    const phys::PhysicsSetup& setup, double lambda);

/// -min(1, |position - goal| / normalizer), in [-1, 0].
double dense_term(const RewardScaffold& s, const Point& position);

/// (1 - lambda) * dense + lambda * (satisfied ? sparse_bonus : 0).
double shaped_reward(const RewardScaffold& s, const Point& position, bool satisfied);

}  // namespace taskforge::data

#endif  // TASKFORGE_DATA_REWARD_HPP_
