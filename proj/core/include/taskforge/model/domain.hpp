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

#ifndef TASKFORGE_MODEL_DOMAIN_HPP_
#define TASKFORGE_MODEL_DOMAIN_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taskforge/model/hierarchy.hpp"
#include "taskforge/model/world.hpp"

namespace taskforge {

struct SourceSpan {
  int line = 0;
  int column = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Parsed domain: class hierarchy, predicate vocabulary and action schemas.
/// Source spans are diagnostics metadata and do not take part in equality.
struct DomainDefinition {
  std::string name;
  ClassHierarchy hierarchy;
  std::vector<PredicateSchema> predicates;
  std::vector<ActionSchema> actions;

  std::vector<SourceSpan> predicate_spans;
  std::vector<SourceSpan> action_spans;

  std::optional<PredicateId> find_predicate(std::string_view n) const;
  std::optional<ActionId> find_action(std::string_view n) const;
  const PredicateSchema& predicate(PredicateId id) const;
  const ActionSchema& action(ActionId id) const;

  friend bool operator==(const DomainDefinition& a, const DomainDefinition& b) {
    return a.name == b.name && a.hierarchy == b.hierarchy &&
           a.predicates == b.predicates && a.actions == b.actions;
  }
};

/// Grounded action sequence with the chain of states it induces.
/// states[0] is the initial state; states[i + 1] follows sequence[i].
struct TaskSpec {
  std::vector<GroundAction> sequence;
  std::vector<WorldState> states;
  std::vector<EntityId> created;
  std::uint64_t seed = 0;

  std::size_t length() const { return sequence.size(); }
  const WorldState& initial() const { return states.front(); }
  const WorldState& final_state() const { return states.back(); }
};

}  // namespace taskforge

#endif  // TASKFORGE_MODEL_DOMAIN_HPP_
