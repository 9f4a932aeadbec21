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

#include "taskforge/phys/constraints.hpp"

#include <cmath>
#include <limits>

#include "taskforge/errors.hpp"
#include "taskforge/model/semantics.hpp"

namespace taskforge::phys {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-9;
constexpr const char* kAxisName[3] = {"x", "y", "z"};

std::array<AxisRange, 3> unbounded() {
  return {AxisRange{-kInf, kInf}, AxisRange{-kInf, kInf}, AxisRange{-kInf, kInf}};
}

// Delta box of subject - reference for a spatial template.
std::array<AxisRange, 3> template_delta(const ResolvedRule& rule, Vec3 hs, Vec3 hr) {
  auto d = unbounded();
  const double c = rule.clearance;
  switch (rule.tmpl) {
    case VolumeTemplate::kOnTop:
      for (int a = 0; a < 2; ++a) d[a] = {-hr[a] + hs[a], hr[a] - hs[a]};
      d[2] = {hr.z + hs.z, hr.z + hs.z};
      break;
    case VolumeTemplate::kInside:
      for (int a = 0; a < 2; ++a) d[a] = {-hr[a] + hs[a], hr[a] - hs[a]};
      // Rests on the container floor; empty when taller than the container.
      d[2] = {-hr.z + hs.z, std::min(-hr.z + hs.z, hr.z - hs.z)};
      break;
    case VolumeTemplate::kLeftOf:
      d[0] = {-kInf, -(hr.x + hs.x + c)};
      break;
    case VolumeTemplate::kRightOf:
      d[0] = {hr.x + hs.x + c, kInf};
      break;
    case VolumeTemplate::kInFront:
      d[1] = {-kInf, -(hr.y + hs.y + c)};
      break;
    case VolumeTemplate::kBehind:
      d[1] = {hr.y + hs.y + c, kInf};
      break;
    case VolumeTemplate::kNear:
      for (int a = 0; a < 3; ++a) d[a] = {-rule.near_max, rule.near_max};
      break;
    case VolumeTemplate::kAttach:
    case VolumeTemplate::kState:
      break;
  }
  return d;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::vector<Vec3>& off,
                        std::uint32_t e) {
  if (parent[e] == e) return e;
  const std::uint32_t p = parent[e];
  const std::uint32_t r = find_root(parent, off, p);
  off[e] = off[e] + off[p];
  parent[e] = r;
  return r;
}

struct Edge {
  std::size_t from;
  std::size_t to;
  double weight;  // x_to - x_from <= weight
};

// Shortest distances from node 0; nullopt on a negative cycle.
std::optional<std::vector<double>> bellman_ford(std::size_t nodes,
                                                const std::vector<Edge>& edges) {
  std::vector<double> dist(nodes, kInf);
  dist[0] = 0.0;
  for (std::size_t round = 0; round < nodes; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      if (dist[e.from] == kInf) continue;
      const double cand = dist[e.from] + e.weight;
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  for (const auto& e : edges) {
    if (dist[e.from] != kInf && dist[e.from] + e.weight < dist[e.to]) return std::nullopt;
  }
  return dist;
}

}  // namespace

ConstraintSystem build_constraints(const DomainDefinition& dom, const WorldState& state,
                                   const PhysicsSetup& setup) {
  ConstraintSystem cs;
  const std::size_t n = state.entity_count();
  cs.shapes.reserve(n);
  cs.fixed.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& e = state.entities()[i];
    const Shape* shape = setup.shape_of(e.cls);
    if (!shape) {
      throw ConfigError("no shape for class '" + dom.hierarchy.name(e.cls) +
                        "' (entity " + e.name + ")");
    }
    cs.names.push_back(e.name);
    cs.shapes.push_back(*shape);
    if (setup.is_fixed(e.cls)) cs.fixed[i] = setup.fixed[e.cls];
  }

  std::vector<std::uint32_t> parent(n);
  cs.offset.assign(n, Vec3{});
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;

  for (const auto& fact : state.facts()) {
    const ResolvedRule* rule = setup.rule_of(fact.predicate);
    if (!rule) {
      throw ConfigError("no spawn rule for predicate '" +
                        dom.predicate(fact.predicate).name + "'");
    }
    if (rule->tmpl == VolumeTemplate::kState) continue;
    const std::uint32_t a = fact.args[0].value;
    const std::uint32_t b = fact.args[1].value;
    if (rule->tmpl == VolumeTemplate::kAttach) {
      // pos(b) = pos(a) + attach_offset
      cs.allowed_contacts.insert(ordered(fact.args[0], fact.args[1]));
      const std::uint32_t ra = find_root(parent, cs.offset, a);
      const std::uint32_t rb = find_root(parent, cs.offset, b);
      const Vec3 want = setup.robot.attach_offset;
      if (ra == rb) {
        const Vec3 have = cs.offset[b] - cs.offset[a];
        if ((have - want).norm() > kSlack) {
          cs.contradictions.push_back(to_string(dom, state, fact) +
                                      " conflicts with another attachment");
        }
        continue;
      }
      parent[rb] = ra;
      cs.offset[rb] = cs.offset[a] + want - cs.offset[b];
      continue;
    }
    if (a == b) {
      // A relation of an entity to itself: only 'near' with dmin == 0 holds.
      if (rule->tmpl != VolumeTemplate::kNear || rule->near_min > 0.0) {
        cs.contradictions.push_back(to_string(dom, state, fact) +
                                    " relates an entity to itself");
      }
      continue;
    }
    if (rule->tmpl == VolumeTemplate::kInside) {
      cs.allowed_contacts.insert(ordered(fact.args[0], fact.args[1]));
    }
    PairConstraint pc;
    pc.subject = fact.args[0];
    pc.reference = fact.args[1];
    pc.delta = template_delta(*rule, cs.shapes[a].half_extents(), cs.shapes[b].half_extents());
    if (rule->tmpl == VolumeTemplate::kNear) {
      pc.has_band = true;
      pc.band_min = rule->near_min;
      pc.band_max = rule->near_max;
    }
    pc.fact = fact;
    cs.pairs.push_back(std::move(pc));
  }
  cs.root.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) cs.root[i] = find_root(parent, cs.offset, i);
  return cs;
}

Aabb default_volume(const ConstraintSystem& cs, std::uint32_t e, const PhysicsSetup& setup) {
  if (cs.fixed[e]) return {*cs.fixed[e], *cs.fixed[e]};
  return setup.workspace.inset(cs.shapes[e].half_extents());
}

Envelope solve_envelope(const ConstraintSystem& cs, const PhysicsSetup& setup) {
  Envelope env;
  const std::size_t n = cs.size();
  if (!cs.contradictions.empty()) {
    env.feasible = false;
    env.reason = cs.contradictions.front();
    return env;
  }
  // Node 0 is the origin; node k + 1 is entity k (only roots get edges).
  std::array<std::vector<Edge>, 3> edges;
  for (std::uint32_t e = 0; e < n; ++e) {
    const Aabb box = default_volume(cs, e, setup);
    if (box.is_empty()) {
      env.feasible = false;
      env.reason = cs.names[e] + " does not fit in the workspace";
      return env;
    }
    const std::size_t r = cs.root[e] + 1;
    for (int a = 0; a < 3; ++a) {
      edges[a].push_back({0, r, box.max()[a] - cs.offset[e][a] + kSlack});
      edges[a].push_back({r, 0, -(box.min()[a] - cs.offset[e][a]) + kSlack});
    }
  }
  for (const auto& pc : cs.pairs) {
    const std::uint32_t s = pc.subject.value;
    const std::uint32_t t = pc.reference.value;
    for (int a = 0; a < 3; ++a) {
      const double shift = -cs.offset[s][a] + cs.offset[t][a];
      const double lo = pc.delta[a].lo + shift;
      const double hi = pc.delta[a].hi + shift;
      if (lo > hi + kSlack) {
        env.feasible = false;
        env.reason = "constraint admits no placement along " + std::string(kAxisName[a]);
        return env;
      }
      if (cs.root[s] == cs.root[t]) {
        if (0.0 < lo - kSlack || 0.0 > hi + kSlack) {
          env.feasible = false;
          env.reason = "rigidly attached entities violate a constraint along " +
                       std::string(kAxisName[a]);
          return env;
        }
        continue;
      }
      const std::size_t ns = cs.root[s] + 1;
      const std::size_t nt = cs.root[t] + 1;
      if (hi < kInf) edges[a].push_back({nt, ns, hi + kSlack});
      if (lo > -kInf) edges[a].push_back({ns, nt, -lo + kSlack});
    }
  }
  env.bounds.assign(n, Aabb{});
  std::array<std::vector<double>, 3> upper;
  std::array<std::vector<double>, 3> lower;
  for (int a = 0; a < 3; ++a) {
    auto up = bellman_ford(n + 1, edges[a]);
    std::vector<Edge> reversed;
    reversed.reserve(edges[a].size());
    for (const auto& e : edges[a]) reversed.push_back({e.to, e.from, e.weight});
    auto down = bellman_ford(n + 1, reversed);
    if (!up || !down) {
      env.feasible = false;
      env.reason = "spatial constraints are contradictory along " + std::string(kAxisName[a]);
      return env;
    }
    upper[a] = std::move(*up);
    lower[a] = std::move(*down);
  }
  for (std::uint32_t e = 0; e < n; ++e) {
    const std::size_t r = cs.root[e] + 1;
    Vec3 lo;
    Vec3 hi;
    for (int a = 0; a < 3; ++a) {
      lo[a] = -lower[a][r] + cs.offset[e][a];
      hi[a] = upper[a][r] + cs.offset[e][a];
      if (lo[a] > hi[a]) {
        // Within the slack: collapse to the midpoint.
        const double mid = 0.5 * (lo[a] + hi[a]);
        lo[a] = hi[a] = mid;
      }
    }
    env.bounds[e] = Aabb(lo, hi);
  }
  return env;
}

}  // namespace taskforge::phys
