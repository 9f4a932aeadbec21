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

#ifndef TASKFORGE_PHYS_SCENE_HPP_
#define TASKFORGE_PHYS_SCENE_HPP_

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "taskforge/model/world.hpp"
#include "taskforge/phys/geometry.hpp"

namespace taskforge::phys {

struct PlacedEntity {
  Pose pose;
  Shape shape;
  bool fixed = false;

  Aabb bounds() const { return Aabb::centered(pose.position, shape.half_extents()); }
  friend bool operator==(const PlacedEntity&, const PlacedEntity&) = default;
};

using EntityPair = std::pair<EntityId, EntityId>;  // first < second

inline EntityPair ordered(EntityId a, EntityId b) {
  return a < b ? EntityPair{a, b} : EntityPair{b, a};
}

/// Concrete geometric realization of one symbolic state.
struct SceneState {
  std::map<EntityId, PlacedEntity> placements;
  /// Pairs whose overlap is intended (held objects, container contents).
  std::set<EntityPair> allowed_contacts;

  friend bool operator==(const SceneState&, const SceneState&) = default;
};

/// Penetration beyond `tolerance`; touching contact is not a collision.
/// Boxes are upright AABBs (yaw ignored).
bool shapes_collide(const Shape& a, Vec3 pa, const Shape& b, Vec3 pb, double tolerance);

/// Every non-allowed overlapping pair, ordered.
std::vector<EntityPair> check_collisions(const SceneState& scene, double tolerance = 0.001);

/// Closed ball: true iff |pose - base| <= reach.
bool check_reachability(const RobotModel& robot, const Pose& pose);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_SCENE_HPP_
