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

#include "taskforge/data/reward.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "taskforge/model/semantics.hpp"

namespace taskforge::data {

namespace {

bool is_spatial(const phys::ResolvedRule* r) {
  return r && r->tmpl != phys::VolumeTemplate::kAttach && r->tmpl != phys::VolumeTemplate::kState;
}

// Classes that hold things: first parameter type of attach predicates.
std::set<ClassId> holder_classes(const DomainDefinition& dom, const phys::PhysicsSetup& setup) {
  std::set<ClassId> out;
  for (PredicateId p = 0; p < dom.predicates.size(); ++p) {
    const auto* r = setup.rule_of(p);
    if (r && r->tmpl == phys::VolumeTemplate::kAttach && !dom.predicates[p].params.empty()) {
      out.insert(dom.predicates[p].params[0]);
    }
  }
  return out;
}

}  // namespace

std::optional<EntityId> manipulated_entity(const DomainDefinition& dom, const TaskSpec& task,
                                           std::size_t step, const phys::PhysicsSetup& setup) {
  const auto& state = task.states[step + 1];
  const auto diff = state_diff(task.states[step], state);
  for (const auto& fact : diff.added) {
    if (!is_spatial(setup.rule_of(fact.predicate)) || fact.args.empty()) continue;
    if (!setup.is_fixed(state.entity(fact.args[0]).cls)) return fact.args[0];
  }
  const auto holders = holder_classes(dom, setup);
  for (const auto e : task.sequence[step].binding) {
    const ClassId c = state.entity(e).cls;
    if (setup.is_fixed(c)) continue;
    const bool holder = std::any_of(holders.begin(), holders.end(), [&](ClassId h) {
      return dom.hierarchy.is_subclass(c, h);
    });
    if (!holder) return e;
  }
  return std::nullopt;
}

std::vector<std::optional<RewardScaffold>> reward_scaffold(
    const DomainDefinition& dom, const TaskSpec& task,
    const std::vector<std::optional<phys::SceneState>>& scenes,
    const phys::PhysicsSetup& setup, double lambda) {
  std::vector<std::optional<RewardScaffold>> out(task.length());
  const double diagonal = setup.workspace.size().norm();
  for (std::size_t i = 0; i < task.length(); ++i) {
    const auto who = manipulated_entity(dom, task, i, setup);
    if (!who || i + 1 >= scenes.size() || !scenes[i + 1]) continue;
    auto it = scenes[i + 1]->placements.find(*who);
    if (it == scenes[i + 1]->placements.end()) continue;
    RewardScaffold s;
    s.manipulated = task.states[i + 1].entity(*who).name;
    const auto p = it->second.pose.position;
    s.goal_center = {p.x, p.y, p.z};
    s.normalizer = diagonal > 0 ? diagonal : 1.0;
    s.lambda = lambda;
    out[i] = s;
  }
  return out;
}

double dense_term(const RewardScaffold& s, const Point& position) {
  double d2 = 0.0;
  for (int a = 0; a < 3; ++a) d2 += (position[a] - s.goal_center[a]) * (position[a] - s.goal_center[a]);
  return -std::min(1.0, std::sqrt(d2) / s.normalizer);
}

double shaped_reward(const RewardScaffold& s, const Point& position, bool satisfied) {
  const double sparse = satisfied ? s.sparse_bonus : 0.0;
  if (s.lambda >= 1.0) return sparse;
  return (1.0 - s.lambda) * dense_term(s, position) + s.lambda * sparse;
}

}  // namespace taskforge::data
