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

#include <sstream>

#include "taskforge/dsl/parser.hpp"

namespace taskforge::dsl {

namespace {

void write_atom(std::ostream& os, const DomainDefinition& dom,
                const ActionSchema& act, const AtomTemplate& atom) {
  os << '(' << dom.predicates[atom.predicate].name;
  for (auto idx : atom.args) os << ' ' << act.params[idx].name;
  os << ')';
}

void write_conjunction(std::ostream& os, const std::vector<std::string>& parts) {
  os << "(and";
  for (const auto& p : parts) os << ' ' << p;
  os << ')';
}

}  // namespace

std::string serialize_domain(const DomainDefinition& dom) {
  std::ostringstream os;
  os << "(define (domain " << dom.name << ')';
  const auto& h = dom.hierarchy;
  const bool has_body = h.size() > 1 || !dom.predicates.empty() || !dom.actions.empty();
  if (has_body) {
    os << "\n  (:requirements :strips :typing :negative-preconditions)";
  }
  if (h.size() > 1) {
    os << "\n  (:types";
    for (ClassId c = 1; c < h.size(); ++c) {
      os << "\n    " << h.name(c) << " - " << h.name(*h.parent(c));
    }
    os << ')';
  }
  if (!dom.predicates.empty()) {
    os << "\n  (:predicates";
    for (const auto& p : dom.predicates) {
      os << "\n    (" << p.name;
      for (std::size_t i = 0; i < p.params.size(); ++i) {
        os << " ?x" << i << " - " << h.name(p.params[i]);
      }
      os << ')';
    }
    os << ')';
  }
  for (const auto& act : dom.actions) {
    os << "\n  (:action " << act.name << "\n    :parameters (";
    for (std::size_t i = 0; i < act.params.size(); ++i) {
      if (i) os << ' ';
      os << act.params[i].name << " - " << h.name(act.params[i].cls);
    }
    os << ")\n    :precondition ";
    std::vector<std::string> parts;
    for (const auto& lit : act.preconditions) {
      std::ostringstream l;
      if (!lit.positive) l << "(not ";
      write_atom(l, dom, act, lit.atom);
      if (!lit.positive) l << ')';
      parts.push_back(l.str());
    }
    write_conjunction(os, parts);
    os << "\n    :effect ";
    parts.clear();
    for (const auto& add : act.add_effects) {
      std::ostringstream l;
      write_atom(l, dom, act, add);
      parts.push_back(l.str());
    }
    for (const auto& del : act.del_effects) {
      std::ostringstream l;
      l << "(not ";
      write_atom(l, dom, act, del);
      l << ')';
      parts.push_back(l.str());
    }
    write_conjunction(os, parts);
    os << ')';
  }
  os << (has_body ? "\n)\n" : ")\n");
  return os.str();
}

}  // namespace taskforge::dsl
