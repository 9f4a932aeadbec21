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

#ifndef TASKFORGE_MODEL_SEMANTICS_HPP_
#define TASKFORGE_MODEL_SEMANTICS_HPP_

#include <span>
#include <string>
#include <vector>

#include "taskforge/model/domain.hpp"

namespace taskforge {

/// Builds a ground predicate, checking arity and argument classes against
/// the schema. Throws DomainError on any mismatch.
GroundPredicate make_fact(const DomainDefinition& dom, const WorldState& state,
                          std::string_view predicate,
                          std::initializer_list<EntityId> args);
GroundPredicate make_fact(const DomainDefinition& dom, const WorldState& state,
                          PredicateId predicate, std::vector<EntityId> args);

/// Builds a type-checked ground action. Throws DomainError on mismatch.
GroundAction make_action(const DomainDefinition& dom, const WorldState& state,
                         std::string_view action, std::vector<EntityId> binding);

/// Closed-world evaluation. Throws DomainError if an argument is unknown.
bool holds(const WorldState& state, const GroundLiteral& literal);

struct PreconditionCheck {
  std::vector<GroundLiteral> violated;
  bool ok() const { return violated.empty(); }
};

/// Throws DomainError when the binding is not total or not well-typed.
void check_binding(const DomainDefinition& dom, const WorldState& state,
                   const GroundAction& action);

PreconditionCheck check_preconditions(const DomainDefinition& dom,
                                      const WorldState& state,
                                      const GroundAction& action);

/// Unchecked fast path: true iff every precondition literal holds. Binding
/// entries need not exist in `state` (fresh entities carry no facts).
bool preconditions_hold(const DomainDefinition& dom, const WorldState& state,
                        ActionId action, std::span<const EntityId> binding);

/// (state - delete-list) + add-list. The input state is not modified.
WorldState apply_postconditions(const DomainDefinition& dom,
                                const WorldState& state,
                                const GroundAction& action);

GroundPredicate instantiate(const AtomTemplate& atom,
                            std::span<const EntityId> binding);

struct StateDiff {
  FactSet added;
  FactSet removed;
  /// Entities present in the target but not in the source (id order).
  std::vector<std::pair<EntityId, Entity>> added_entities;
  friend bool operator==(const StateDiff&, const StateDiff&) = default;
};

StateDiff state_diff(const WorldState& a, const WorldState& b);
/// Applies a diff produced by state_diff(a, b) to a, yielding b.
WorldState apply_diff(const WorldState& a, const StateDiff& diff);

/// Initial state convention: one "gripper" entity of class Gripper and one
/// "table" entity of class Table when those concrete classes exist, plus
/// Free(gripper) when a unary Free predicate accepts it. Otherwise empty.
WorldState make_initial_state(const DomainDefinition& dom);

/// Independent re-validation of a task's state chain. Returns one message
/// per problem found; empty means the task is symbolically valid.
std::vector<std::string> revalidate_task(const DomainDefinition& dom,
                                         const TaskSpec& task);

std::string to_string(const DomainDefinition& dom, const WorldState& state,
                      const GroundPredicate& fact);
std::string to_string(const DomainDefinition& dom, const WorldState& state,
                      const GroundLiteral& literal);
std::string to_string(const DomainDefinition& dom, const WorldState& state,
                      const GroundAction& action);

}  // namespace taskforge

#endif  // TASKFORGE_MODEL_SEMANTICS_HPP_
