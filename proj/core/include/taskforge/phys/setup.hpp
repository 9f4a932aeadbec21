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

#ifndef TASKFORGE_PHYS_SETUP_HPP_
#define TASKFORGE_PHYS_SETUP_HPP_

#include <optional>
#include <vector>

#include "taskforge/dsl/sidecar.hpp"
#include "taskforge/model/domain.hpp"
#include "taskforge/phys/geometry.hpp"

namespace taskforge::phys {

struct ResolvedRule {
  VolumeTemplate tmpl = VolumeTemplate::kState;
  double clearance = 0.0;  // half-space templates
  double near_min = 0.0;   // near band on center distance
  double near_max = 0.0;
};

/// Shapes, fixed poses and spawn rules resolved against one domain.
struct PhysicsSetup {
  std::vector<std::optional<Shape>> shapes;    // by ClassId, inherited
  std::vector<std::optional<Vec3>> fixed;      // by ClassId
  std::vector<std::optional<ResolvedRule>> rules;  // by PredicateId
  RobotModel robot;
  Aabb workspace;
  double tolerance = 0.001;
  int max_attempts = 200;
  bool short_circuit = false;

  const Shape* shape_of(ClassId c) const {
    return c < shapes.size() && shapes[c] ? &*shapes[c] : nullptr;
  }
  const ResolvedRule* rule_of(PredicateId p) const {
    return p < rules.size() && rules[p] ? &*rules[p] : nullptr;
  }
  bool is_fixed(ClassId c) const { return c < fixed.size() && fixed[c].has_value(); }
};

/// Throws ConfigError for unknown classes or predicates, templates applied
/// to predicates of the wrong arity, fixed classes without a shape, or a
/// missing workspace that cannot be derived. Without an explicit
/// workspace, one is derived from the single fixed box class: its top
/// face footprint, up to 0.5 m above it.
PhysicsSetup resolve_physics(const DomainDefinition& dom, const dsl::ShapesConfig& shapes,
                             const dsl::SpawnRules& rules);

/// Sets each predicate's kind from its rule: spatial templates -> spatial,
/// attach -> binding, state -> unary-state.
void apply_rule_kinds(DomainDefinition& dom, const dsl::SpawnRules& rules);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_SETUP_HPP_
