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

#include <set>

#include "taskforge/dsl/parser.hpp"
#include "taskforge/dsl/sidecar.hpp"
#include "taskforge/model/semantics.hpp"

namespace taskforge::dsl {

namespace {

SourceSpan span_or_default(const std::vector<SourceSpan>& spans, std::size_t i) {
  return i < spans.size() ? spans[i] : SourceSpan{1, 1};
}

SourceSpan weight_span(const SamplingWeights& w, const std::string& key) {
  auto it = w.spans.find(key);
  return it == w.spans.end() ? SourceSpan{1, 1} : it->second;
}

}  // namespace

std::vector<Diagnostic> validate_domain(const DomainDefinition& dom,
                                        const SamplingWeights* weights) {
  std::vector<Diagnostic> out;

  std::vector<bool> used(dom.predicates.size(), false);
  for (const auto& act : dom.actions) {
    for (const auto& lit : act.preconditions) used[lit.atom.predicate] = true;
    for (const auto& a : act.add_effects) used[a.predicate] = true;
    for (const auto& d : act.del_effects) used[d.predicate] = true;
  }
  for (std::size_t i = 0; i < dom.predicates.size(); ++i) {
    if (!used[i]) {
      out.push_back(warning(DiagCode::kUnusedPredicate,
                            span_or_default(dom.predicate_spans, i),
                            "predicate '" + dom.predicates[i].name +
                                "' is never used by any action"));
    }
  }

  // Relaxed reachability: delete lists and negative literals are ignored,
  // so an action flagged here can never fire from the initial state.
  std::vector<bool> achievable(dom.predicates.size(), false);
  const WorldState initial = make_initial_state(dom);
  for (const auto& fact : initial.facts()) {
    achievable[fact.predicate] = true;
  }
  std::vector<bool> reachable(dom.actions.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t a = 0; a < dom.actions.size(); ++a) {
      if (reachable[a]) continue;
      bool ok = true;
      for (const auto& lit : dom.actions[a].preconditions) {
        if (lit.positive && !achievable[lit.atom.predicate]) ok = false;
      }
      if (!ok) continue;
      reachable[a] = true;
      progress = true;
      for (const auto& add : dom.actions[a].add_effects) achievable[add.predicate] = true;
    }
  }
  for (std::size_t a = 0; a < dom.actions.size(); ++a) {
    if (!reachable[a]) {
      out.push_back(warning(DiagCode::kUnreachableAction,
                            span_or_default(dom.action_spans, a),
                            "action '" + dom.actions[a].name +
                                "' can never be applied: its preconditions are "
                                "not achievable from the initial state"));
    }
  }

  if (weights) {
    for (const auto& [name, w] : weights->action) {
      if (!dom.find_action(name)) {
        out.push_back(error(DiagCode::kUnknownAction,
                            weight_span(*weights, "action " + name),
                            "weight for unknown action '" + name + "'"));
      }
    }
    for (const auto& [key, w] : weights->pair) {
      for (const auto& name : {key.first, key.second}) {
        if (!dom.find_action(name)) {
          out.push_back(error(DiagCode::kUnknownAction,
                              weight_span(*weights, "pair " + key.first + " " + key.second),
                              "pair weight references unknown action '" + name + "'"));
        }
      }
    }
    for (const auto& [cls, w] : weights->entity) {
      auto id = dom.hierarchy.find(cls);
      const auto at = weight_span(*weights, "entity " + cls);
      if (!id) {
        out.push_back(error(DiagCode::kUnknownClass, at,
                            "entity weight for unknown class '" + cls + "'"));
      } else if (!dom.hierarchy.is_concrete(*id)) {
        out.push_back(warning(DiagCode::kAbstractEntityWeight, at,
                              "class '" + cls +
                                  "' is not concrete; its entity weight has no effect"));
      }
    }
  }
  return out;
}

}  // namespace taskforge::dsl
