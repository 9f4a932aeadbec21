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

#ifndef TASKFORGE_TESTS_FIXTURES_HPP_
#define TASKFORGE_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "taskforge/dsl/parser.hpp"
#include "taskforge/dsl/sidecar.hpp"
#include "taskforge/gen/rng.hpp"
#include "taskforge/gen/weights.hpp"
#include "taskforge/model/semantics.hpp"
#include "taskforge/phys/setup.hpp"
#include "taskforge/phys/spawner.hpp"

namespace fixtures {

inline std::string data_path(const std::string& rel) {
  return std::string(TASKFORGE_DATA_DIR) + "/" + rel;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline taskforge::DomainDefinition parse_or_throw(const std::string& text) {
  auto r = taskforge::dsl::parse_domain(text);
  if (!r.ok()) {
    std::string msg = "fixture domain does not parse:";
    for (const auto& d : r.diagnostics) msg += "\n" + taskforge::dsl::format(d);
    throw std::runtime_error(msg);
  }
  return std::move(*r.value);
}

template <typename T>
T value_or_throw(taskforge::dsl::ParseResult<T> r, const char* what) {
  if (!r.ok()) throw std::runtime_error(std::string("fixture ") + what + " does not parse");
  return std::move(*r.value);
}

/// The bundled pick-and-place configuration, fully resolved.
struct Bundled {
  taskforge::DomainDefinition dom;
  taskforge::dsl::SamplingWeights raw_weights;
  taskforge::ResolvedWeights weights;
  taskforge::dsl::ShapesConfig shapes;
  taskforge::dsl::SpawnRules rules;
  taskforge::phys::PhysicsSetup setup;
};

inline Bundled load_bundled() {
  using namespace taskforge;
  Bundled b;
  b.dom = parse_or_throw(read_text(data_path("pick_place/domain.pddl")));
  b.raw_weights = value_or_throw(dsl::parse_weights(read_text(data_path("pick_place/weights.cfg"))),
                                 "weights");
  b.shapes = value_or_throw(dsl::parse_shapes(read_text(data_path("pick_place/shapes.cfg"))),
                            "shapes");
  b.rules = value_or_throw(dsl::parse_rules(read_text(data_path("pick_place/rules.cfg"))), "rules");
  phys::apply_rule_kinds(b.dom, b.rules);
  b.weights = resolve_weights(b.dom, b.raw_weights);
  b.setup = phys::resolve_physics(b.dom, b.shapes, b.rules);
  return b;
}

inline taskforge::DomainDefinition mini_domain() {
  return parse_or_throw(read_text(data_path("mini/domain.pddl")));
}

/// Small pick-and-place fragment whose Grasp keeps Near and only needs
/// Near plus "not already holding".
inline const char* kGraspDomain = R"(
(define (domain fig2)
  (:requirements :strips :typing :negative-preconditions)
  (:types Gripper Table GraspableObject - object
          Apple Cube - GraspableObject)
  (:predicates (Near ?g - Gripper ?o - GraspableObject)
               (Holding ?g - Gripper ?o - GraspableObject)
               (OnTop ?o - GraspableObject ?t - Table)
               (Free ?g - Gripper))
  (:action Grasp
    :parameters (?g - Gripper ?o - GraspableObject ?t - Table)
    :precondition (and (Near ?g ?o) (not (Holding ?g ?o)))
    :effect (and (Holding ?g ?o) (not (OnTop ?o ?t))))
  (:action Wait
    :parameters (?g - Gripper)
    :precondition (and)
    :effect (and))
  (:action Place
    :parameters (?g - Gripper ?o - GraspableObject ?t - Table)
    :precondition (and (Holding ?g ?o))
    :effect (and (OnTop ?o ?t) (Free ?g) (not (Holding ?g ?o)))))
)";

inline taskforge::DomainDefinition grasp_domain() { return parse_or_throw(kGraspDomain); }

/// Random well-formed domain built directly as a model value: a class
/// tree, typed predicates and actions whose literals use only compatible
/// parameters, with disjoint add and delete lists.
inline taskforge::DomainDefinition random_domain(taskforge::Rng& rng) {
  using namespace taskforge;
  DomainDefinition dom;
  dom.name = "rand" + std::to_string(rng.below(1000));
  const std::size_t classes = rng.below(6);
  for (std::size_t i = 0; i < classes; ++i) {
    const ClassId parent = static_cast<ClassId>(rng.below(dom.hierarchy.size()));
    dom.hierarchy.add("C" + std::to_string(i), parent);
  }
  auto any_class = [&] { return static_cast<ClassId>(rng.below(dom.hierarchy.size())); };
  const std::size_t preds = rng.below(5);
  for (std::size_t i = 0; i < preds; ++i) {
    PredicateSchema p;
    p.name = "p" + std::to_string(i);
    const std::size_t arity = rng.below(4);
    for (std::size_t k = 0; k < arity; ++k) p.params.push_back(any_class());
    p.kind = arity >= 2 ? PredicateKind::kBinding : PredicateKind::kUnaryState;
    dom.predicates.push_back(std::move(p));
  }
  const std::size_t acts = rng.below(5);
  for (std::size_t i = 0; i < acts; ++i) {
    ActionSchema a;
    a.name = "a" + std::to_string(i);
    const std::size_t np = rng.below(4);
    for (std::size_t k = 0; k < np; ++k) a.params.push_back({"?v" + std::to_string(k), any_class()});
    auto random_atom = [&]() -> std::optional<AtomTemplate> {
      if (dom.predicates.empty()) return std::nullopt;
      const auto pid = static_cast<PredicateId>(rng.below(dom.predicates.size()));
      AtomTemplate t{pid, {}};
      for (ClassId want : dom.predicates[pid].params) {
        std::vector<std::size_t> ok;
        for (std::size_t k = 0; k < a.params.size(); ++k) {
          if (dom.hierarchy.is_subclass(a.params[k].cls, want)) ok.push_back(k);
        }
        if (ok.empty()) return std::nullopt;
        t.args.push_back(ok[rng.below(ok.size())]);
      }
      return t;
    };
    auto contains = [](const auto& v, const auto& x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (std::size_t k = rng.below(4); k > 0; --k) {
      auto t = random_atom();
      if (!t) continue;
      LiteralTemplate lit{*t, rng.below(2) == 0};
      LiteralTemplate flipped{*t, !lit.positive};
      if (!contains(a.preconditions, lit) && !contains(a.preconditions, flipped)) {
        a.preconditions.push_back(lit);
      }
    }
    for (std::size_t k = rng.below(4); k > 0; --k) {
      auto t = random_atom();
      if (!t || contains(a.add_effects, *t) || contains(a.del_effects, *t)) continue;
      (rng.below(2) ? a.add_effects : a.del_effects).push_back(*t);
    }
    dom.actions.push_back(std::move(a));
  }
  return dom;
}

inline const char* kGeoDomain = R"(
(define (domain geo)
  (:types Gripper Table Thing Bin - object Ball Block - Thing)
  (:predicates (OnTop ?a - object ?b - object) (LeftOf ?a - object ?b - object)
               (RightOf ?a - object ?b - object) (InFront ?a - object ?b - object)
               (Behind ?a - object ?b - object) (Inside ?a - object ?b - object)
               (Near ?a - object ?b - object) (Holding ?g - Gripper ?o - object)
               (Free ?g - Gripper)))
)";

inline const char* kGeoShapes = R"(
shape Table box 1.0 1.0 0.05
shape Ball sphere 0.04
shape Block box 0.05 0.05 0.05
shape Bin box 0.2 0.2 0.1
shape Gripper sphere 0.02
fixed Table 0.6 0 0.725
robot 0 0 0.75 1.0 0 0 -0.07
workspace 0.1 -0.5 0.75 1.1 0.5 1.25
)";

inline const char* kGeoRules = R"(
rule OnTop ontop
rule LeftOf leftof
rule RightOf rightof
rule InFront infront
rule Behind behind
rule Inside inside
rule Near near 0.07 0.15
rule Holding attach
rule Free state
)";

/// Small geometric domain with one predicate per volume template.
struct Geo {
  taskforge::DomainDefinition dom;
  taskforge::phys::PhysicsSetup setup;
  taskforge::WorldState state;

  Geo() {
    dom = parse_or_throw(kGeoDomain);
    const auto rules = value_or_throw(taskforge::dsl::parse_rules(kGeoRules), "rules");
    taskforge::phys::apply_rule_kinds(dom, rules);
    setup = taskforge::phys::resolve_physics(dom, value_or_throw(taskforge::dsl::parse_shapes(kGeoShapes), "shapes"),
                            rules);
  }
  taskforge::EntityId add(const std::string& name, const std::string& cls) {
    return state.add_entity({name, dom.hierarchy.id(cls)});
  }
  void fact(std::string_view p, taskforge::EntityId a, taskforge::EntityId b) {
    state.insert(taskforge::make_fact(dom, state, p, {a, b}));
  }
  taskforge::phys::SpawnOutcome spawn(std::uint64_t seed) const {
    taskforge::Rng rng(seed);
    return taskforge::phys::spawn_scene(dom, state, setup, rng);
  }
  taskforge::phys::Aabb volume(taskforge::EntityId e, const taskforge::phys::SceneState& placed = {}) const {
    return taskforge::phys::volume_for_entity(dom, state, e, placed, setup);
  }
};


/// Geo state with random entities and up to four random relations.
inline Geo random_geo(taskforge::Rng& rng) {
  static const char* preds[] = {"OnTop", "LeftOf", "RightOf", "InFront",
                                "Behind", "Near",   "Inside",  "Holding"};
  static const char* classes[] = {"Ball", "Block", "Bin"};
  Geo g;
  std::vector<taskforge::EntityId> ids{g.add("table", "Table"), g.add("gripper", "Gripper")};
  const std::size_t n = 1 + rng.below(4);
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(g.add("e" + std::to_string(i), classes[rng.below(3)]));
  }
  for (std::size_t k = rng.below(5); k > 0; --k) {
    const std::string p = preds[rng.below(8)];
    const auto a = p == "Holding" ? ids[1] : ids[1 + rng.below(ids.size() - 1)];
    const auto b = ids[rng.below(ids.size())];
    if (a == b || (p == "Holding" && b == ids[0])) continue;
    g.fact(p, a, b);
  }
  return g;
}

}  // namespace fixtures

#endif  // TASKFORGE_TESTS_FIXTURES_HPP_
