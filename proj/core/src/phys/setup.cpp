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

#include "taskforge/phys/setup.hpp"

#include "taskforge/errors.hpp"

namespace taskforge::phys {

namespace {

bool is_spatial(VolumeTemplate t) {
  return t != VolumeTemplate::kAttach && t != VolumeTemplate::kState;
}

}  // namespace

PhysicsSetup resolve_physics(const DomainDefinition& dom, const dsl::ShapesConfig& shapes,
                             const dsl::SpawnRules& rules) {
  PhysicsSetup s;
  const auto& h = dom.hierarchy;
  std::vector<std::optional<Shape>> declared(h.size());
  for (const auto& [cls, shape] : shapes.shapes) {
    auto id = h.find(cls);
    if (!id) throw ConfigError("shape for unknown class '" + cls + "'");
    declared[*id] = shape;
  }
  s.shapes.resize(h.size());
  for (ClassId c = 0; c < h.size(); ++c) {
    std::optional<ClassId> cur = c;
    while (cur && !declared[*cur]) cur = h.parent(*cur);
    if (cur) s.shapes[c] = declared[*cur];
  }
  s.fixed.resize(h.size());
  for (const auto& [cls, pos] : shapes.fixed) {
    auto id = h.find(cls);
    if (!id) throw ConfigError("fixed pose for unknown class '" + cls + "'");
    if (!s.shapes[*id]) throw ConfigError("fixed class '" + cls + "' has no shape");
    s.fixed[*id] = pos;
  }
  s.robot = shapes.robot.value_or(RobotModel{});
  if (shapes.workspace) {
    s.workspace = *shapes.workspace;
  } else {
    std::optional<Aabb> derived;
    int boxes = 0;
    for (ClassId c = 0; c < h.size(); ++c) {
      if (!s.fixed[c] || s.shapes[c]->kind != Shape::Kind::kBox) continue;
      ++boxes;
      const Aabb b = Aabb::centered(*s.fixed[c], s.shapes[c]->half_extents());
      derived = Aabb({b.min().x, b.min().y, b.max().z}, {b.max().x, b.max().y, b.max().z + 0.5});
    }
    if (boxes != 1) {
      throw ConfigError("no workspace given and it cannot be derived from a single fixed box");
    }
    s.workspace = *derived;
  }

  s.tolerance = rules.tolerance;
  s.rules.resize(dom.predicates.size());
  for (const auto& r : rules.rules) {
    auto id = dom.find_predicate(r.predicate);
    if (!id) throw ConfigError("spawn rule for unknown predicate '" + r.predicate + "'");
    const auto arity = dom.predicates[*id].arity();
    if ((is_spatial(r.tmpl) || r.tmpl == VolumeTemplate::kAttach) && arity != 2) {
      throw ConfigError("template '" + std::string(template_name(r.tmpl)) +
                        "' needs a binary predicate; '" + r.predicate + "' has arity " +
                        std::to_string(arity));
    }
    ResolvedRule rr;
    rr.tmpl = r.tmpl;
    rr.clearance = rules.clearance;
    switch (r.tmpl) {
      case VolumeTemplate::kLeftOf:
      case VolumeTemplate::kRightOf:
      case VolumeTemplate::kInFront:
      case VolumeTemplate::kBehind:
        if (!r.params.empty()) rr.clearance = r.params[0];
        break;
      case VolumeTemplate::kNear:
        rr.near_min = r.params.at(0);
        rr.near_max = r.params.at(1);
        break;
      default:
        break;
    }
    s.rules[*id] = rr;
  }
  return s;
}

void apply_rule_kinds(DomainDefinition& dom, const dsl::SpawnRules& rules) {
  for (const auto& r : rules.rules) {
    auto id = dom.find_predicate(r.predicate);
    if (!id) continue;
    dom.predicates[*id].kind = is_spatial(r.tmpl) ? PredicateKind::kSpatial
                               : r.tmpl == VolumeTemplate::kAttach ? PredicateKind::kBinding
                                                                    : PredicateKind::kUnaryState;
  }
}

}  // namespace taskforge::phys
