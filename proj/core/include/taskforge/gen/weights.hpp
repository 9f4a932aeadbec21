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

#ifndef TASKFORGE_GEN_WEIGHTS_HPP_
#define TASKFORGE_GEN_WEIGHTS_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "taskforge/dsl/sidecar.hpp"
#include "taskforge/gen/rng.hpp"
#include "taskforge/model/domain.hpp"

namespace taskforge {

/// Every candidate had zero combined weight.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampling weights resolved against a domain's action and class ids.
struct ResolvedWeights {
  std::vector<double> action;  // by ActionId
  std::vector<double> pair;    // prev * num_actions + next
  std::vector<double> entity;  // by ClassId
  double reuse_prob = 0.5;

  std::size_t num_actions() const { return action.size(); }
  double pair_weight(ActionId prev, ActionId next) const {
    return pair[prev * action.size() + next];
  }
  /// action_w[a] * pair_w[(prev, a)], with the pair factor 1 when no prev.
  double combined(std::optional<ActionId> prev, ActionId a) const {
    return action[a] * (prev ? pair_weight(*prev, a) : 1.0);
  }
};

/// Throws ConfigError when a weight names an unknown action or class.
ResolvedWeights resolve_weights(const DomainDefinition& dom,
                                const dsl::SamplingWeights& weights);

/// Uniform weights (all 1) and reuse_prob 0.5.
ResolvedWeights uniform_weights(const DomainDefinition& dom);

/// Index drawn proportionally to `weights`. Throws SamplingError when the
/// total is not positive.
std::size_t sample_index(std::span<const double> weights, Rng& rng);

/// Draws from `candidates` with probability proportional to
/// action_w[a] * pair_w[(prev, a)].
ActionId sample_action(const ResolvedWeights& w, std::optional<ActionId> prev,
                       std::span<const ActionId> candidates, Rng& rng);

}  // namespace taskforge

#endif  // TASKFORGE_GEN_WEIGHTS_HPP_
