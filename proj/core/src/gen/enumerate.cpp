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

#include "taskforge/gen/enumerate.hpp"

#include <cmath>
#include <sstream>

#include "taskforge/model/semantics.hpp"

namespace taskforge {

namespace {

std::string describe(double estimate, double ceiling) {
  std::ostringstream os;
  os << "enumeration refused: estimated " << estimate
     << " search nodes exceeds the ceiling of " << ceiling;
  return os.str();
}

class Enumerator {
 public:
  Enumerator(const DomainDefinition& dom, std::size_t length, std::size_t max_entities,
             const std::function<void(const TaskSpec&)>& visit)
      : dom_(dom), length_(length), max_entities_(max_entities), visit_(visit) {}

  std::uint64_t run() {
    WorldState init = make_initial_state(dom_);
    initial_entities_ = init.entity_count();
    states_.push_back(std::move(init));
    descend();
    return count_;
  }

 private:
  void descend() {
    if (sequence_.size() == length_) {
      ++count_;
      if (visit_) emit();
      return;
    }
    for (ActionId a = 0; a < dom_.actions.size(); ++a) {
      binding_.clear();
      extended_ = states_.back();
      bind(a, 0);
    }
  }

  // Chooses an entity for parameter p, then recurses on p + 1.
  void bind(ActionId a, std::size_t p) {
    const auto& schema = dom_.actions[a];
    if (p == schema.params.size()) {
      GroundAction ga{a, binding_};
      if (!check_preconditions(dom_, extended_, ga).ok()) return;
      sequence_.push_back(ga);
      states_.push_back(apply_postconditions(dom_, extended_, ga));
      const WorldState saved = extended_;
      const auto saved_binding = binding_;
      descend();
      extended_ = saved;
      binding_ = saved_binding;
      states_.pop_back();
      sequence_.pop_back();
      return;
    }
    const ClassId want = schema.params[p].cls;
    const std::size_t existing = extended_.entity_count();
    for (std::uint32_t i = 0; i < existing; ++i) {
      EntityId id{i};
      if (!dom_.hierarchy.is_subclass(extended_.entity(id).cls, want)) continue;
      bool used = false;
      for (auto b : binding_) used = used || b == id;
      if (used) continue;
      binding_.push_back(id);
      bind(a, p + 1);
      binding_.pop_back();
    }
    if (existing - initial_entities_ >= max_entities_) return;
    for (ClassId c : dom_.hierarchy.concrete_under(want)) {
      const WorldState saved = extended_;
      EntityId id = extended_.add_entity({dom_.hierarchy.name(c) + "#" +
                                              std::to_string(existing), c});
      binding_.push_back(id);
      bind(a, p + 1);
      binding_.pop_back();
      extended_ = saved;
    }
  }

  void emit() {
    TaskSpec task;
    task.sequence = sequence_;
    task.created.clear();
    const auto& entities = states_.back().entities();
    for (const auto& s : states_) {
      WorldState full;
      for (const auto& e : entities) full.add_entity(e);
      for (const auto& f : s.facts()) full.insert(f);
      task.states.push_back(std::move(full));
    }
    for (std::size_t i = initial_entities_; i < entities.size(); ++i) {
      task.created.push_back(EntityId{static_cast<std::uint32_t>(i)});
    }
    visit_(task);
  }

  const DomainDefinition& dom_;
  std::size_t length_;
  std::size_t max_entities_;
  const std::function<void(const TaskSpec&)>& visit_;
  std::size_t initial_entities_ = 0;
  std::vector<WorldState> states_;
  std::vector<GroundAction> sequence_;
  std::vector<EntityId> binding_;
  WorldState extended_;
  std::uint64_t count_ = 0;
};

}  // namespace

OracleRefused::OracleRefused(double estimate, double ceiling)
    : std::runtime_error(describe(estimate, ceiling)), estimate_(estimate) {}

double estimate_enumeration(const DomainDefinition& dom, std::size_t length,
                            std::size_t max_entities) {
  const double entities =
      static_cast<double>(make_initial_state(dom).entity_count() + max_entities);
  double branching = 0.0;
  for (const auto& act : dom.actions) {
    double product = 1.0;
    for (const auto& p : act.params) {
      product *= entities + static_cast<double>(dom.hierarchy.concrete_under(p.cls).size());
    }
    branching += product;
  }
  return std::pow(branching, static_cast<double>(length));
}

std::uint64_t enumerate_valid_sequences(
    const DomainDefinition& dom, std::size_t length, std::size_t max_entities,
    const std::function<void(const TaskSpec&)>& visit, double ceiling) {
  const double estimate = estimate_enumeration(dom, length, max_entities);
  if (estimate > ceiling) throw OracleRefused(estimate, ceiling);
  Enumerator e(dom, length, max_entities, visit);
  return e.run();
}

}  // namespace taskforge
