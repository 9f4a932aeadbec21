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

#include "taskforge/model/world.hpp"

#include "taskforge/model/domain.hpp"

namespace taskforge {

EntityId WorldState::add_entity(Entity e) {
  EntityId id{static_cast<std::uint32_t>(entities_.size())};
  entities_.push_back(std::move(e));
  return id;
}

const Entity& WorldState::entity(EntityId id) const {
  if (!has_entity(id)) {
    throw DomainError("unknown entity id " + std::to_string(id.value));
  }
  return entities_[id.value];
}

std::optional<PredicateId> DomainDefinition::find_predicate(
    std::string_view n) const {
  for (std::size_t i = 0; i < predicates.size(); ++i) {
    if (predicates[i].name == n) return static_cast<PredicateId>(i);
  }
  return std::nullopt;
}

std::optional<ActionId> DomainDefinition::find_action(std::string_view n) const {
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].name == n) return static_cast<ActionId>(i);
  }
  return std::nullopt;
}

const PredicateSchema& DomainDefinition::predicate(PredicateId id) const {
  if (id >= predicates.size()) {
    throw DomainError("unknown predicate id " + std::to_string(id));
  }
  return predicates[id];
}

const ActionSchema& DomainDefinition::action(ActionId id) const {
  if (id >= actions.size()) {
    throw DomainError("unknown action id " + std::to_string(id));
  }
  return actions[id];
}

}  // namespace taskforge
