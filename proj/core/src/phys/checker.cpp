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

#include "taskforge/phys/checker.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "taskforge/model/semantics.hpp"

namespace taskforge::phys {

namespace {

// Loose slack so that the spawner's own tolerance and floating-point
// rounding never flag a correct scene.
constexpr double kEps = 1e-6;

double overlap_depth(const Aabb& a, const Aabb& b, int axis) {
  return std::min(a.max()[axis], b.max()[axis]) - std::max(a.min()[axis], b.min()[axis]);
}

bool boxes_penetrate(const Aabb& a, const Aabb& b, double tol) {
  for (int axis = 0; axis < 3; ++axis) {
    if (overlap_depth(a, b, axis) <= tol + kEps) return false;
  }
  return true;
}

Vec3 closest_point(const Aabb& box, Vec3 p) {
  Vec3 q;
  for (int a = 0; a < 3; ++a) q[a] = std::clamp(p[a], box.min()[a], box.max()[a]);
  return q;
}

bool penetrate(const PlacedEntity& a, const PlacedEntity& b, double tol) {
  using K = Shape::Kind;
  const Vec3 pa = a.pose.position;
  const Vec3 pb = b.pose.position;
  if (a.shape.kind == K::kSphere && b.shape.kind == K::kSphere) {
    const double reach = a.shape.radius + b.shape.radius - tol - kEps;
    return reach > 0 && (pa - pb).norm2() < reach * reach;
  }
  if (a.shape.kind == K::kBox && b.shape.kind == K::kBox) {
    return boxes_penetrate(a.bounds(), b.bounds(), tol);
  }
  const PlacedEntity& box = a.shape.kind == K::kBox ? a : b;
  const PlacedEntity& ball = a.shape.kind == K::kBox ? b : a;
  const Vec3 c = ball.pose.position;
  const Vec3 q = closest_point(box.bounds(), c);
  const double r = ball.shape.radius - tol - kEps;
  return r > 0 && (c - q).norm2() < r * r;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol + kEps; }

}  // namespace

std::vector<std::string> recheck_scene(const DomainDefinition& dom, const WorldState& state,
                                       const PhysicsSetup& setup, const SceneState& scene) {
  std::vector<std::string> problems;
  const double tol = setup.tolerance;
  for (std::uint32_t i = 0; i < state.entity_count(); ++i) {
    const auto& ent = state.entities()[i];
    auto it = scene.placements.find(EntityId{i});
    if (it == scene.placements.end()) {
      problems.push_back(ent.name + " is not placed");
      continue;
    }
    const auto& pe = it->second;
    if (!pe.pose.finite()) problems.push_back(ent.name + " has a non-finite pose");
    const Shape* shape = setup.shape_of(ent.cls);
    if (!shape || !(pe.shape == *shape)) problems.push_back(ent.name + " has the wrong shape");
    if (setup.is_fixed(ent.cls)) {
      if ((pe.pose.position - *setup.fixed[ent.cls]).norm() > tol) {
        problems.push_back(ent.name + " moved from its fixed pose");
      }
      continue;
    }
    if (!setup.workspace.contains(pe.bounds(), kEps)) {
      problems.push_back(ent.name + " leaves the workspace");
    }
    const double d = (pe.pose.position - setup.robot.base).norm();
    if (d > setup.robot.reach + kEps) problems.push_back(ent.name + " is out of reach");
  }
  if (!problems.empty()) return problems;

  auto at = [&](EntityId id) -> const PlacedEntity& { return scene.placements.at(id); };
  for (const auto& fact : state.facts()) {
    const ResolvedRule* rule = setup.rule_of(fact.predicate);
    if (!rule) {
      problems.push_back("no rule for " + to_string(dom, state, fact));
      continue;
    }
    if (rule->tmpl == VolumeTemplate::kState) continue;
    const auto& a = at(fact.args[0]);
    const auto& b = at(fact.args[1]);
    const Aabb ba = a.bounds();
    const Aabb bb = b.bounds();
    const double c = rule->clearance;
    bool ok = true;
    switch (rule->tmpl) {
      case VolumeTemplate::kOnTop:
        ok = near(ba.min().z, bb.max().z, tol) && ba.min().x >= bb.min().x - tol - kEps &&
             ba.max().x <= bb.max().x + tol + kEps && ba.min().y >= bb.min().y - tol - kEps &&
             ba.max().y <= bb.max().y + tol + kEps;
        break;
      case VolumeTemplate::kInside:
        ok = bb.contains(ba, tol + kEps) && near(ba.min().z, bb.min().z, tol);
        break;
      case VolumeTemplate::kLeftOf:
        ok = ba.max().x + c <= bb.min().x + tol + kEps;
        break;
      case VolumeTemplate::kRightOf:
        ok = ba.min().x >= bb.max().x + c - tol - kEps;
        break;
      case VolumeTemplate::kInFront:
        ok = ba.max().y + c <= bb.min().y + tol + kEps;
        break;
      case VolumeTemplate::kBehind:
        ok = ba.min().y >= bb.max().y + c - tol - kEps;
        break;
      case VolumeTemplate::kNear: {
        const double d = (a.pose.position - b.pose.position).norm();
        ok = d >= rule->near_min - tol - kEps && d <= rule->near_max + tol + kEps;
        break;
      }
      case VolumeTemplate::kAttach:
        ok = (b.pose.position - (a.pose.position + setup.robot.attach_offset)).norm() <=
             tol + kEps;
        break;
      case VolumeTemplate::kState:
        break;
    }
    if (!ok) problems.push_back(to_string(dom, state, fact) + " is not realized");
  }

  // Contacts the facts make intentional.
  std::set<EntityPair> allowed;
  for (const auto& fact : state.facts()) {
    const ResolvedRule* rule = setup.rule_of(fact.predicate);
    if (rule && (rule->tmpl == VolumeTemplate::kAttach || rule->tmpl == VolumeTemplate::kInside)) {
      allowed.insert(ordered(fact.args[0], fact.args[1]));
    }
  }
  for (auto i = scene.placements.begin(); i != scene.placements.end(); ++i) {
    for (auto j = std::next(i); j != scene.placements.end(); ++j) {
      if (allowed.count({i->first, j->first})) continue;
      if (penetrate(i->second, j->second, tol)) {
        problems.push_back(state.entity(i->first).name + " collides with " +
                           state.entity(j->first).name);
      }
    }
  }
  return problems;
}

}  // namespace taskforge::phys
