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

#include "taskforge/phys/scene.hpp"

#include <algorithm>

namespace taskforge::phys {

namespace {

bool box_box(Vec3 ha, Vec3 pa, Vec3 hb, Vec3 pb, double tol) {
  for (int axis = 0; axis < 3; ++axis) {
    const double depth = std::min(pa[axis] + ha[axis], pb[axis] + hb[axis]) -
                         std::max(pa[axis] - ha[axis], pb[axis] - hb[axis]);
    if (depth <= tol) return false;  // separating axis
  }
  return true;
}

bool sphere_sphere(double ra, Vec3 pa, double rb, Vec3 pb, double tol) {
  return ra + rb - (pa - pb).norm() > tol;
}

bool box_sphere(Vec3 h, Vec3 pbox, double r, Vec3 psphere, double tol) {
  const double d = Aabb::centered(pbox, h).distance(psphere);
  return r - d > tol;
}

}  // namespace

bool shapes_collide(const Shape& a, Vec3 pa, const Shape& b, Vec3 pb, double tolerance) {
  using K = Shape::Kind;
  if (a.kind == K::kBox && b.kind == K::kBox) {
    return box_box(a.half_extents(), pa, b.half_extents(), pb, tolerance);
  }
  if (a.kind == K::kSphere && b.kind == K::kSphere) {
    return sphere_sphere(a.radius, pa, b.radius, pb, tolerance);
  }
  if (a.kind == K::kBox) return box_sphere(a.half_extents(), pa, b.radius, pb, tolerance);
  return box_sphere(b.half_extents(), pb, a.radius, pa, tolerance);
}

std::vector<EntityPair> check_collisions(const SceneState& scene, double tolerance) {
  std::vector<EntityPair> out;
  for (auto i = scene.placements.begin(); i != scene.placements.end(); ++i) {
    for (auto j = std::next(i); j != scene.placements.end(); ++j) {
      const EntityPair key{i->first, j->first};
      if (scene.allowed_contacts.count(key)) continue;
      if (shapes_collide(i->second.shape, i->second.pose.position, j->second.shape,
                         j->second.pose.position, tolerance)) {
        out.push_back(key);
      }
    }
  }
  return out;
}

bool check_reachability(const RobotModel& robot, const Pose& pose) {
  return (pose.position - robot.base).norm2() <= robot.reach * robot.reach;
}

}  // namespace taskforge::phys
