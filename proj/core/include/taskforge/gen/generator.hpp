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

#ifndef TASKFORGE_GEN_GENERATOR_HPP_
#define TASKFORGE_GEN_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taskforge/gen/rng.hpp"
#include "taskforge/gen/weights.hpp"
#include "taskforge/model/domain.hpp"

namespace taskforge {

struct GenerationConfig {
  std::size_t length = 4;
  /// Cap on entities created during generation (initial entities excluded).
  std::size_t max_entities = 6;
  /// Action draws per step, and grounding candidates checked per draw.
  std::size_t resample_budget = 64;
  /// Total chronological backtracks per run.
  std::size_t backtrack_budget = 256;
  std::uint64_t seed = 0;

  /// Throws ConfigError when length is zero.
  void validate() const;
};

enum class TraceEventKind { kAccepted, kNoGrounding, kZeroWeight, kBacktrack, kStepExhausted };

struct TraceEvent {
  TraceEventKind kind = TraceEventKind::kAccepted;
  std::size_t step = 0;
  std::optional<ActionId> action;
  std::size_t groundings_tried = 0;
};

struct GenerationTrace {
  std::vector<TraceEvent> events;
  /// Records for the steps currently on the sequence; popped on backtrack.
  std::vector<TraceEvent> accepted;
  std::size_t backtracks = 0;
};

struct GenerationResult {
  std::optional<TaskSpec> task;
  GenerationTrace trace;
  bool ok() const { return task.has_value(); }
};

/// Builds a symbolically valid sequence of cfg.length grounded actions.
///
/// Each step draws an action (action and pair weights), then searches its
/// groundings in weighted random order. A step with no valid draw within
/// the resample budget pops the previous action (chronological
/// backtracking). Deterministic in (dom, weights, cfg). Throws ConfigError
/// when every action weight is zero; budget exhaustion returns an empty
/// task with the trace.
GenerationResult generate_sequence(const DomainDefinition& dom,
                                   const ResolvedWeights& weights,
                                   const GenerationConfig& cfg);

struct Grounding {
  GroundAction action;
  /// Entities to create; they take ids state.entity_count(), +1, ...
  std::vector<Entity> created;
  std::size_t tried = 0;
};

/// Picks entities for every parameter of `action`.
///
/// Per parameter, an existing class-compatible entity is chosen with
/// probability reuse_prob (weighted by its class weight), otherwise a new
/// entity of a concrete subclass (weighted). Classes with weight 0 are
/// never created. Bindings are injective. Candidate bindings are checked
/// in weighted random order without replacement, at most
/// cfg.resample_budget of them. Returns nullopt when none satisfies the
/// preconditions.
std::optional<Grounding> instantiate_action(const DomainDefinition& dom,
                                            const WorldState& state,
                                            ActionId action,
                                            const ResolvedWeights& weights,
                                            const GenerationConfig& cfg,
                                            std::size_t created_so_far, Rng& rng);

/// Adds `g.created` to `state`.
void materialize(const DomainDefinition& dom, WorldState& state, const Grounding& g);

/// Canonical key of a grounded sequence: action ids with entity id:class
/// per argument, e.g. "0(2:3) 1(2:3)".
std::string sequence_key(const TaskSpec& task);

}  // namespace taskforge

#endif  // TASKFORGE_GEN_GENERATOR_HPP_
