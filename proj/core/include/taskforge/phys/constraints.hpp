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

#ifndef TASKFORGE_PHYS_CONSTRAINTS_HPP_
#define TASKFORGE_PHYS_CONSTRAINTS_HPP_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taskforge/model/domain.hpp"
#include "taskforge/phys/scene.hpp"
#include "taskforge/phys/setup.hpp"

namespace taskforge::phys {

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// subject.position - reference.position lies in `delta` on every axis and,
/// for near-type rules, the center distance lies in [band_min, band_max].
struct PairConstraint {
  EntityId subject;
  EntityId reference;
  std::array<AxisRange, 3> delta{};
  bool has_band = false;
  double band_min = 0.0;
  double band_max = 0.0;
  GroundPredicate fact;
};

/// Geometric reading of one symbolic state.
///
/// Attachments group entities into rigid units: every entity's position is
/// its unit root's position plus a fixed offset. Fixed-class entities have
/// a prescribed position; all others must lie inside the workspace.
struct ConstraintSystem {
  std::vector<std::string> names;           // by entity index
  std::vector<Shape> shapes;                // by entity index
  std::vector<std::optional<Vec3>> fixed;   // by entity index
  std::vector<PairConstraint> pairs;
  std::set<EntityPair> allowed_contacts;
  std::vector<std::uint32_t> root;          // unit root per entity
  std::vector<Vec3> offset;                 // position relative to root
  std::vector<std::string> contradictions;  // exact infeasibility found while building

  std::size_t size() const { return shapes.size(); }
  bool movable(std::uint32_t e) const { return !fixed[e].has_value(); }
};

/// Throws ConfigError when an entity class has no shape or a fact's
/// predicate has no spawn rule.
ConstraintSystem build_constraints(const DomainDefinition& dom, const WorldState& state,
                                   const PhysicsSetup& setup);

/// Tightest per-axis bounds on every entity's center implied by the
/// constraint boxes, or infeasible. Each axis is a system of difference
/// constraints solved exactly by Bellman-Ford, so an infeasible verdict is
/// a proof (up to a 1e-9 m slack), never a sampling artifact.
struct Envelope {
  bool feasible = true;
  std::vector<Aabb> bounds;  // by entity index
  std::string reason;
};

Envelope solve_envelope(const ConstraintSystem& cs, const PhysicsSetup& setup);

/// Default region for an entity's center: the workspace shrunk by its half
/// extents, or its fixed position.
Aabb default_volume(const ConstraintSystem& cs, std::uint32_t e, const PhysicsSetup& setup);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_CONSTRAINTS_HPP_
