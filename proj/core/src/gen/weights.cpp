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

#include "taskforge/gen/weights.hpp"

namespace taskforge {

ResolvedWeights resolve_weights(const DomainDefinition& dom,
                                const dsl::SamplingWeights& weights) {
  ResolvedWeights r = uniform_weights(dom);
  r.reuse_prob = weights.reuse_prob;
  for (const auto& [name, w] : weights.action) {
    auto id = dom.find_action(name);
    if (!id) throw ConfigError("weight for unknown action '" + name + "'");
    r.action[*id] = w;
  }
  for (const auto& [key, w] : weights.pair) {
    auto prev = dom.find_action(key.first);
    auto next = dom.find_action(key.second);
    if (!prev || !next) {
      throw ConfigError("pair weight for unknown action pair '" + key.first +
                        "' -> '" + key.second + "'");
    }
    r.pair[*prev * r.num_actions() + *next] = w;
  }
  for (const auto& [cls, w] : weights.entity) {
    auto id = dom.hierarchy.find(cls);
    if (!id) throw ConfigError("entity weight for unknown class '" + cls + "'");
    r.entity[*id] = w;
  }
  return r;
}

ResolvedWeights uniform_weights(const DomainDefinition& dom) {
  ResolvedWeights r;
  r.action.assign(dom.actions.size(), 1.0);
  r.pair.assign(dom.actions.size() * dom.actions.size(), 1.0);
  r.entity.assign(dom.hierarchy.size(), 1.0);
  return r;
}

std::size_t sample_index(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw SamplingError("all candidate weights are zero");
  const double target = rng.uniform01() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = i;
    if (target < acc) return i;
  }
  return last_positive;  // rounding at the top end
}

ActionId sample_action(const ResolvedWeights& w, std::optional<ActionId> prev,
                       std::span<const ActionId> candidates, Rng& rng) {
  if (candidates.empty()) throw SamplingError("no candidate actions");
  std::vector<double> weights;
  weights.reserve(candidates.size());
  for (ActionId a : candidates) weights.push_back(w.combined(prev, a));
  return candidates[sample_index(weights, rng)];
}

}  // namespace taskforge
