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

#include "taskforge/model/semantics.hpp"

#include <algorithm>
#include <sstream>

namespace taskforge {

namespace {

void check_fact_typing(const DomainDefinition& dom, const WorldState& state,
                       const GroundPredicate& fact) {
  const auto& schema = dom.predicate(fact.predicate);
  if (fact.args.size() != schema.arity()) {
    throw DomainError("predicate '" + schema.name + "' expects " +
                      std::to_string(schema.arity()) + " arguments, got " +
                      std::to_string(fact.args.size()));
  }
  for (std::size_t i = 0; i < fact.args.size(); ++i) {
    const auto& e = state.entity(fact.args[i]);
    if (!dom.hierarchy.is_subclass(e.cls, schema.params[i])) {
      throw DomainError("argument '" + e.name + "' of " + schema.name +
                        " is a " + dom.hierarchy.name(e.cls) + ", not a " +
                        dom.hierarchy.name(schema.params[i]));
    }
  }
}

}  // namespace

GroundPredicate make_fact(const DomainDefinition& dom, const WorldState& state,
                          PredicateId predicate, std::vector<EntityId> args) {
  GroundPredicate fact{predicate, std::move(args)};
  check_fact_typing(dom, state, fact);
  return fact;
}

GroundPredicate make_fact(const DomainDefinition& dom, const WorldState& state,
                          std::string_view predicate,
                          std::initializer_list<EntityId> args) {
  auto id = dom.find_predicate(predicate);
  if (!id) throw DomainError("unknown predicate '" + std::string(predicate) + "'");
  return make_fact(dom, state, *id, std::vector<EntityId>(args));
}

GroundAction make_action(const DomainDefinition& dom, const WorldState& state,
                         std::string_view action, std::vector<EntityId> binding) {
  auto id = dom.find_action(action);
  if (!id) throw DomainError("unknown action '" + std::string(action) + "'");
  GroundAction ga{*id, std::move(binding)};
  check_binding(dom, state, ga);
  return ga;
}

bool holds(const WorldState& state, const GroundLiteral& literal) {
  for (auto arg : literal.atom.args) state.entity(arg);
  return state.contains(literal.atom) == literal.positive;
}

void check_binding(const DomainDefinition& dom, const WorldState& state,
                   const GroundAction& action) {
  const auto& schema = dom.action(action.action);
  if (action.binding.size() != schema.params.size()) {
    throw DomainError("action '" + schema.name + "' expects " +
                      std::to_string(schema.params.size()) +
                      " bindings, got " + std::to_string(action.binding.size()));
  }
  for (std::size_t i = 0; i < schema.params.size(); ++i) {
    const auto& e = state.entity(action.binding[i]);
    if (!dom.hierarchy.is_subclass(e.cls, schema.params[i].cls)) {
      throw DomainError("parameter " + schema.params[i].name + " of " +
                        schema.name + " bound to '" + e.name + "' (" +
                        dom.hierarchy.name(e.cls) + "), expected " +
                        dom.hierarchy.name(schema.params[i].cls));
    }
  }
}

GroundPredicate instantiate(const AtomTemplate& atom,
                            std::span<const EntityId> binding) {
  GroundPredicate out;
  out.predicate = atom.predicate;
  out.args.reserve(atom.args.size());
  for (auto idx : atom.args) out.args.push_back(binding[idx]);
  return out;
}

PreconditionCheck check_preconditions(const DomainDefinition& dom,
                                      const WorldState& state,
                                      const GroundAction& action) {
  check_binding(dom, state, action);
  PreconditionCheck result;
  for (const auto& lit : dom.action(action.action).preconditions) {
    GroundLiteral ground{instantiate(lit.atom, action.binding), lit.positive};
    if (!holds(state, ground)) result.violated.push_back(std::move(ground));
  }
  return result;
}

bool preconditions_hold(const DomainDefinition& dom, const WorldState& state,
                        ActionId action, std::span<const EntityId> binding) {
  for (const auto& lit : dom.actions[action].preconditions) {
    if (state.contains(instantiate(lit.atom, binding)) != lit.positive) {
      return false;
    }
  }
  return true;
}

WorldState apply_postconditions(const DomainDefinition& dom,
                                const WorldState& state,
                                const GroundAction& action) {
  check_binding(dom, state, action);
  WorldState next = state;
  const auto& schema = dom.action(action.action);
  for (const auto& del : schema.del_effects) {
    next.erase(instantiate(del, action.binding));
  }
  for (const auto& add : schema.add_effects) {
    next.insert(instantiate(add, action.binding));
  }
  return next;
}

StateDiff state_diff(const WorldState& a, const WorldState& b) {
  StateDiff d;
  std::set_difference(b.facts().begin(), b.facts().end(), a.facts().begin(),
                      a.facts().end(), std::inserter(d.added, d.added.end()));
  std::set_difference(a.facts().begin(), a.facts().end(), b.facts().begin(),
                      b.facts().end(), std::inserter(d.removed, d.removed.end()));
  for (std::size_t i = a.entity_count(); i < b.entity_count(); ++i) {
    d.added_entities.emplace_back(EntityId{static_cast<std::uint32_t>(i)},
                                  b.entities()[i]);
  }
  return d;
}

WorldState apply_diff(const WorldState& a, const StateDiff& diff) {
  WorldState out = a;
  for (const auto& [id, e] : diff.added_entities) {
    if (id.value != out.entity_count()) {
      throw DomainError("diff entity ids are not contiguous with the source state");
    }
    out.add_entity(e);
  }
  for (const auto& f : diff.removed) out.erase(f);
  for (const auto& f : diff.added) out.insert(f);
  return out;
}

WorldState make_initial_state(const DomainDefinition& dom) {
  WorldState s;
  std::optional<EntityId> gripper;
  if (auto c = dom.hierarchy.find("Gripper"); c && dom.hierarchy.is_concrete(*c)) {
    gripper = s.add_entity({"gripper", *c});
  }
  if (auto c = dom.hierarchy.find("Table"); c && dom.hierarchy.is_concrete(*c)) {
    s.add_entity({"table", *c});
  }
  if (auto p = dom.find_predicate("Free"); p && gripper) {
    const auto& schema = dom.predicate(*p);
    if (schema.arity() == 1 &&
        dom.hierarchy.is_subclass(s.entity(*gripper).cls, schema.params[0])) {
      s.insert({*p, {*gripper}});
    }
  }
  return s;
}

std::vector<std::string> revalidate_task(const DomainDefinition& dom,
                                         const TaskSpec& task) {
  std::vector<std::string> problems;
  if (task.states.size() != task.sequence.size() + 1) {
    problems.push_back("expected " + std::to_string(task.sequence.size() + 1) +
                       " states, found " + std::to_string(task.states.size()));
    return problems;
  }
  for (std::size_t i = 0; i < task.sequence.size(); ++i) {
    const auto& before = task.states[i];
    const auto& action = task.sequence[i];
    try {
      auto check = check_preconditions(dom, before, action);
      for (const auto& lit : check.violated) {
        problems.push_back("step " + std::to_string(i) + " " +
                           to_string(dom, before, action) +
                           ": precondition violated: " +
                           to_string(dom, before, lit));
      }
      if (apply_postconditions(dom, before, action) != task.states[i + 1]) {
        problems.push_back("step " + std::to_string(i) + " " +
                           to_string(dom, before, action) +
                           ": successor state does not match effects");
      }
    } catch (const DomainError& e) {
      problems.push_back("step " + std::to_string(i) + ": " + e.what());
    }
  }
  return problems;
}

std::string to_string(const DomainDefinition& dom, const WorldState& state,
                      const GroundPredicate& fact) {
  std::ostringstream os;
  os << dom.predicate(fact.predicate).name << '(';
  for (std::size_t i = 0; i < fact.args.size(); ++i) {
    if (i) os << ',';
    if (state.has_entity(fact.args[i])) {
      os << state.entity(fact.args[i]).name;
    } else {
      os << '#' << fact.args[i].value;
    }
  }
  os << ')';
  return os.str();
}

std::string to_string(const DomainDefinition& dom, const WorldState& state,
                      const GroundLiteral& literal) {
  return (literal.positive ? "" : "not ") + to_string(dom, state, literal.atom);
}

std::string to_string(const DomainDefinition& dom, const WorldState& state,
                      const GroundAction& action) {
  std::ostringstream os;
  os << dom.action(action.action).name << '(';
  for (std::size_t i = 0; i < action.binding.size(); ++i) {
    if (i) os << ',';
    if (state.has_entity(action.binding[i])) {
      os << state.entity(action.binding[i]).name;
    } else {
      os << '#' << action.binding[i].value;
    }
  }
  os << ')';
  return os.str();
}

}  // namespace taskforge
