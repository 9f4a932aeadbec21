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

#ifndef TASKFORGE_MODEL_WORLD_HPP_
#define TASKFORGE_MODEL_WORLD_HPP_

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "taskforge/model/hierarchy.hpp"

namespace taskforge {

using PredicateId = std::uint16_t;
using ActionId = std::uint16_t;

/// Opaque entity identity. Ids are dense indices into a state's entity table.
struct EntityId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EntityId&, const EntityId&) = default;
};

struct Entity {
  std::string name;  // display only
  ClassId cls = ClassHierarchy::kRoot;
  friend bool operator==(const Entity&, const Entity&) = default;
};

enum class PredicateKind : std::uint8_t { kUnaryState, kBinding, kSpatial };

struct PredicateSchema {
  std::string name;
  std::vector<ClassId> params;
  PredicateKind kind = PredicateKind::kUnaryState;

  std::size_t arity() const { return params.size(); }
  friend bool operator==(const PredicateSchema&, const PredicateSchema&) = default;
};

struct GroundPredicate {
  PredicateId predicate = 0;
  std::vector<EntityId> args;
  friend auto operator<=>(const GroundPredicate&, const GroundPredicate&) = default;
};

struct GroundLiteral {
  GroundPredicate atom;
  bool positive = true;
  friend auto operator<=>(const GroundLiteral&, const GroundLiteral&) = default;
};

using FactSet = std::set<GroundPredicate>;

/// Closed-world symbolic state: a set of ground facts over a table of entities.
class WorldState {
 public:
  EntityId add_entity(Entity e);
  bool has_entity(EntityId id) const { return id.value < entities_.size(); }
  /// Throws DomainError for unknown ids.
  const Entity& entity(EntityId id) const;
  const std::vector<Entity>& entities() const { return entities_; }
  std::size_t entity_count() const { return entities_.size(); }

  const FactSet& facts() const { return facts_; }
  bool contains(const GroundPredicate& p) const { return facts_.count(p) != 0; }
  void insert(GroundPredicate p) { facts_.insert(std::move(p)); }
  void erase(const GroundPredicate& p) { facts_.erase(p); }

  friend bool operator==(const WorldState&, const WorldState&) = default;

 private:
  std::vector<Entity> entities_;
  FactSet facts_;
};

struct Parameter {
  std::string name;
  ClassId cls = ClassHierarchy::kRoot;
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// Predicate applied to action parameters, referenced by index.
struct AtomTemplate {
  PredicateId predicate = 0;
  std::vector<std::size_t> args;
  friend bool operator==(const AtomTemplate&, const AtomTemplate&) = default;
};

struct LiteralTemplate {
  AtomTemplate atom;
  bool positive = true;
  friend bool operator==(const LiteralTemplate&, const LiteralTemplate&) = default;
};

/// STRIPS action: conjunctive precondition over positive and negative
/// literals, effect as disjoint add and delete lists.
struct ActionSchema {
  std::string name;
  std::vector<Parameter> params;
  std::vector<LiteralTemplate> preconditions;
  std::vector<AtomTemplate> add_effects;
  std::vector<AtomTemplate> del_effects;
  friend bool operator==(const ActionSchema&, const ActionSchema&) = default;
};

struct GroundAction {
  ActionId action = 0;
  std::vector<EntityId> binding;  // binding[i] is bound to params[i]
  friend auto operator<=>(const GroundAction&, const GroundAction&) = default;
};

}  // namespace taskforge

#endif  // TASKFORGE_MODEL_WORLD_HPP_
