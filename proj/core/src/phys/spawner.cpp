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

#include "taskforge/phys/spawner.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace taskforge::phys {

namespace {

constexpr int kLocalTries = 16;
constexpr double kDetermined = 1e-6;

constexpr std::pair<std::string_view, FailureKind> kFailureNames[] = {
    {"none", FailureKind::kNone},
    {"empty-volume", FailureKind::kEmptyVolume},
    {"collision", FailureKind::kCollision},
    {"unreachable", FailureKind::kUnreachable},
    {"attempts-exhausted", FailureKind::kAttemptsExhausted},
};

bool in_band(const PairConstraint& pc, Vec3 ps, Vec3 pr, double tol) {
  if (!pc.has_band) return true;
  const double d = (ps - pr).norm();
  return d >= pc.band_min - tol && d <= pc.band_max + tol;
}

bool determined(const Aabb& box) {
  const Vec3 s = box.size();
  return s.x <= kDetermined && s.y <= kDetermined && s.z <= kDetermined;
}

// Units ordered so that references come before their subjects; members of
// a constraint cycle end up adjacent. Fixed units go first.
std::vector<std::uint32_t> placement_order(const ConstraintSystem& cs) {
  const std::size_t n = cs.size();
  std::vector<std::vector<std::uint32_t>> out(n);
  for (const auto& pc : cs.pairs) {
    const auto s = cs.root[pc.subject.value];
    const auto r = cs.root[pc.reference.value];
    if (s != r) out[r].push_back(s);
  }
  std::vector<std::uint32_t> roots;
  std::vector<bool> fixed_unit(n, false);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (cs.root[e] == e) roots.push_back(e);
    if (!cs.movable(e)) fixed_unit[cs.root[e]] = true;
  }
  // Tarjan emits a component only after everything reachable from it, so
  // reversing the emission order lists references first.
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> emitted;
  int counter = 0;
  std::function<void(std::uint32_t)> visit = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::uint32_t> comp;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.rbegin(), comp.rend());
      emitted.insert(emitted.end(), comp.begin(), comp.end());
    }
  };
  for (auto r : roots) {
    if (index[r] < 0) visit(r);
  }
  std::reverse(emitted.begin(), emitted.end());
  std::stable_partition(emitted.begin(), emitted.end(),
                        [&](std::uint32_t r) { return fixed_unit[r]; });
  return emitted;
}

struct Rejections {
  int collision = 0;
  int unreachable = 0;
  int constraint = 0;
};

}  // namespace

std::string_view failure_name(FailureKind kind) {
  for (const auto& [name, value] : kFailureNames) {
    if (value == kind) return name;
  }
  return "?";
}

bool parse_failure(std::string_view name, FailureKind& out) {
  for (const auto& [n, value] : kFailureNames) {
    if (n == name) {
      out = value;
      return true;
    }
  }
  return false;
}

Aabb volume_for_entity(const ConstraintSystem& cs, const Envelope& env, EntityId entity,
                       const SceneState& placed, const PhysicsSetup& setup) {
  if (!env.feasible) return Aabb::empty();
  const std::uint32_t e = entity.value;
  Aabb volume = default_volume(cs, e, setup).intersect(env.bounds[e]);
  for (const auto& pc : cs.pairs) {
    const bool subject = pc.subject == entity;
    const bool reference = pc.reference == entity;
    if (!subject && !reference) continue;
    const EntityId other = subject ? pc.reference : pc.subject;
    auto it = placed.placements.find(other);
    if (it == placed.placements.end()) continue;
    const Vec3 p = it->second.pose.position;
    Vec3 lo;
    Vec3 hi;
    for (int a = 0; a < 3; ++a) {
      // subject - reference in [lo, hi]
      lo[a] = subject ? p[a] + pc.delta[a].lo : p[a] - pc.delta[a].hi;
      hi[a] = subject ? p[a] + pc.delta[a].hi : p[a] - pc.delta[a].lo;
    }
    volume = volume.intersect(Aabb(lo, hi));
  }
  // Rigid partners pin the entity exactly.
  for (const auto& [id, pe] : placed.placements) {
    if (id == entity || cs.root[id.value] != cs.root[e]) continue;
    const Vec3 p = pe.pose.position + cs.offset[e] - cs.offset[id.value];
    volume = volume.intersect(Aabb(p, p));
  }
  return volume;
}

Aabb volume_for_entity(const DomainDefinition& dom, const WorldState& state, EntityId entity,
                       const SceneState& placed, const PhysicsSetup& setup) {
  const auto cs = build_constraints(dom, state, setup);
  const auto env = solve_envelope(cs, setup);
  return volume_for_entity(cs, env, entity, placed, setup);
}

SpawnOutcome spawn_scene(const DomainDefinition& dom, const WorldState& state,
                         const PhysicsSetup& setup, Rng& rng) {
  SpawnOutcome outcome;
  const auto cs = build_constraints(dom, state, setup);
  const auto env = solve_envelope(cs, setup);
  const std::size_t n = cs.size();
  if (!env.feasible) {
    outcome.failure = FailureKind::kEmptyVolume;
    outcome.detail = env.reason;
    return outcome;
  }
  const double tol = setup.tolerance;

  std::vector<std::vector<std::uint32_t>> members(n);
  for (std::uint32_t e = 0; e < n; ++e) members[cs.root[e]].push_back(e);

  // Exact verdicts that need no sampling.
  for (std::uint32_t e = 0; e < n; ++e) {
    if (default_volume(cs, e, setup).intersect(env.bounds[e]).is_empty()) {
      outcome.failure = FailureKind::kEmptyVolume;
      outcome.detail = "no valid region for " + cs.names[e];
      return outcome;
    }
    if (cs.movable(e) && env.bounds[e].distance(setup.robot.base) > setup.robot.reach) {
      outcome.failure = FailureKind::kUnreachable;
      outcome.detail = cs.names[e] + " can only be placed out of reach";
      return outcome;
    }
  }
  for (const auto& pc : cs.pairs) {
    const auto s = pc.subject.value;
    const auto r = pc.reference.value;
    if (cs.root[s] == cs.root[r] && !in_band(pc, cs.offset[s], cs.offset[r], tol)) {
      outcome.failure = FailureKind::kEmptyVolume;
      outcome.detail = "rigidly attached " + cs.names[s] + " and " + cs.names[r] +
                       " violate a distance band";
      return outcome;
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (cs.allowed_contacts.count({EntityId{i}, EntityId{j}})) continue;
      const bool rigid = cs.root[i] == cs.root[j];
      if (!rigid && !(determined(env.bounds[i]) && determined(env.bounds[j]))) continue;
      const Vec3 pi = rigid ? cs.offset[i] : env.bounds[i].center();
      const Vec3 pj = rigid ? cs.offset[j] : env.bounds[j].center();
      if (shapes_collide(cs.shapes[i], pi, cs.shapes[j], pj, tol)) {
        outcome.failure = FailureKind::kCollision;
        outcome.detail = cs.names[i] + " and " + cs.names[j] + " are forced to overlap";
        return outcome;
      }
    }
  }

  const auto order = placement_order(cs);
  Rejections rejections;
  for (int attempt = 1; attempt <= setup.max_attempts; ++attempt) {
    outcome.attempts = attempt;
    SceneState scene;
    scene.allowed_contacts = cs.allowed_contacts;
    bool ok = true;
    for (const auto root : order) {
      const auto& unit = members[root];
      Aabb region = env.bounds[root];
      for (const auto m : unit) {
        const Aabb v = volume_for_entity(cs, env, EntityId{m}, scene, setup);
        if (v.is_empty()) {
          region = Aabb::empty();
          break;
        }
        region = region.intersect(
            Aabb(v.min() - cs.offset[m], v.max() - cs.offset[m]));
      }
      if (region.is_empty()) {
        ++rejections.constraint;
        ok = false;
        break;
      }
      bool placed = false;
      for (int t = 0; t < kLocalTries && !placed; ++t) {
        Vec3 p;
        for (int a = 0; a < 3; ++a) p[a] = rng.uniform(region.min()[a], region.max()[a]);
        if (!cs.movable(root) || std::any_of(unit.begin(), unit.end(), [&](auto m) {
              return !cs.movable(m);
            })) {
          p = region.center();  // fixed units have a single admissible pose
        }
        bool reject = false;
        for (const auto m : unit) {
          const Vec3 pm = p + cs.offset[m];
          if (cs.movable(m) && !check_reachability(setup.robot, Pose{pm, 0.0})) {
            ++rejections.unreachable;
            reject = true;
            break;
          }
        }
        if (reject) continue;
        for (const auto& pc : cs.pairs) {
          const auto s = pc.subject.value;
          const auto r = pc.reference.value;
          const bool s_in = cs.root[s] == root;
          const bool r_in = cs.root[r] == root;
          if (!pc.has_band || (!s_in && !r_in) || (s_in && r_in)) continue;
          const auto other = s_in ? pc.reference : pc.subject;
          auto it = scene.placements.find(other);
          if (it == scene.placements.end()) continue;
          const Vec3 ps = s_in ? p + cs.offset[s] : it->second.pose.position;
          const Vec3 pr = r_in ? p + cs.offset[r] : it->second.pose.position;
          if (!in_band(pc, ps, pr, tol)) {
            ++rejections.constraint;
            reject = true;
            break;
          }
        }
        if (reject) continue;
        for (const auto m : unit) {
          const Vec3 pm = p + cs.offset[m];
          for (const auto& [id, pe] : scene.placements) {
            if (cs.allowed_contacts.count(ordered(EntityId{m}, id))) continue;
            if (shapes_collide(cs.shapes[m], pm, pe.shape, pe.pose.position, tol)) {
              reject = true;
              break;
            }
          }
          if (reject) break;
        }
        if (reject) {
          ++rejections.collision;
          continue;
        }
        for (const auto m : unit) {
          scene.placements[EntityId{m}] =
              PlacedEntity{Pose{p + cs.offset[m], 0.0}, cs.shapes[m], !cs.movable(m)};
        }
        placed = true;
      }
      if (!placed) {
        ok = false;
        break;
      }
    }
    if (ok) {
      outcome.scene = std::move(scene);
      outcome.failure = FailureKind::kNone;
      return outcome;
    }
  }
  outcome.failure = FailureKind::kAttemptsExhausted;
  const std::array<std::pair<const char*, int>, 3> causes = {{
      {"collision", rejections.collision},
      {"unreachable", rejections.unreachable},
      {"constraint", rejections.constraint},
  }};
  const auto worst = std::max_element(causes.begin(), causes.end(), [](auto& a, auto& b) {
    return a.second < b.second;
  });
  outcome.detail = "gave up after " + std::to_string(setup.max_attempts) +
                   " attempts; most rejections: " + worst->first + " (" +
                   std::to_string(rejections.collision) + " collision, " +
                   std::to_string(rejections.unreachable) + " unreachable, " +
                   std::to_string(rejections.constraint) + " constraint)";
  return outcome;
}

}  // namespace taskforge::phys
