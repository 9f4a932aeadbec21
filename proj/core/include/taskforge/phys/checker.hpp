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

#ifndef TASKFORGE_PHYS_CHECKER_HPP_
#define TASKFORGE_PHYS_CHECKER_HPP_

#include <string>
#include <vector>

#include "taskforge/model/domain.hpp"
#include "taskforge/phys/scene.hpp"
#include "taskforge/phys/setup.hpp"

namespace taskforge::phys {

/// Independent check of a spawned scene against the symbolic state it is
/// meant to realize. Works on entity bounding boxes and face relations
/// rather than the spawner's center-offset formulation. Returns one
/// message per violation; empty means the scene is a valid realization.
std::vector<std::string> recheck_scene(const DomainDefinition& dom, const WorldState& state,
                                       const PhysicsSetup& setup, const SceneState& scene);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_CHECKER_HPP_
