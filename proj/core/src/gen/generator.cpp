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

#include "taskforge/gen/generator.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "taskforge/model/semantics.hpp"

namespace taskforge {

namespace {

// Past this many joint candidates, groundings are drawn independently per
// parameter instead of enumerating the product.
constexpr std::size_t kMaxJointCandidates = 1u << 15;

struct Option {
  bool fresh = false;
  EntityId existing{};
  ClassId cls = 0;
  double weight = 0.0;
};

std::vector<Option> parameter_options(const DomainDefinition& dom,
                                      const WorldState& state, ClassId param_cls,
                                      const ResolvedWeights& w, bool may_create) {
  std::vector<Option> existing;
  std::vector<Option> fresh;
  double total_existing = 0.0;
  double total_fresh = 0.0;
  for (std::uint32_t i = 0; i < state.entity_count(); ++i) {
    const auto& e = state.entities()[i];
    if (!dom.hierarchy.is_subclass(e.cls, param_cls)) continue;
    existing.push_back({false, EntityId{i}, e.cls, w.entity[e.cls]});
    total_existing += w.entity[e.cls];
  }
  if (may_create) {
    for (ClassId c : dom.hierarchy.concrete_under(param_cls)) {
      if (w.entity[c] <= 0.0) continue;
      fresh.push_back({true, {}, c, w.entity[c]});
      total_fresh += w.entity[c];
    }
  }
  std::vector<Option> out;
  if (total_existing > 0.0 && total_fresh > 0.0) {
    for (auto o : existing) {
      o.weight = w.reuse_prob * o.weight / total_existing;
      out.push_back(o);
    }
    for (auto o : fresh) {
      o.weight = (1.0 - w.reuse_prob) * o.weight / total_fresh;
      out.push_back(o);
    }
  } else if (total_existing > 0.0) {
    for (auto o : existing) {
      o.weight /= total_existing;
      out.push_back(o);
    }
  } else if (total_fresh > 0.0) {
    for (auto o : fresh) {
      o.weight /= total_fresh;
      out.push_back(o);
    }
  } else {
    // Only zero-weight entities exist: still bindable, uniformly.
    for (auto o : existing) {
      o.weight = 1.0 / static_cast<double>(existing.size());
      out.push_back(o);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Option& o) { return !(o.weight > 0.0); }),
            out.end());
  return out;
}

struct Candidate {
  std::vector<std::uint32_t> choice;  // option index per parameter
  double weight = 0.0;
};

// Resolves a choice vector into a binding; nullopt when not injective or
// over the creation budget.
std::optional<Grounding> resolve_choice(const WorldState& state,
                                        const std::vector<std::vector<Option>>& opts,
                                        const std::vector<std::uint32_t>& choice,
                                        ActionId action, std::size_t remaining) {
  Grounding g;
  g.action.action = action;
  g.action.binding.reserve(choice.size());
  auto next_id = static_cast<std::uint32_t>(state.entity_count());
  for (std::size_t p = 0; p < choice.size(); ++p) {
    const Option& o = opts[p][choice[p]];
    if (o.fresh) {
      if (g.created.size() >= remaining) return std::nullopt;
      g.action.binding.push_back(EntityId{next_id++});
      g.created.push_back({"", o.cls});
    } else {
      if (std::find(g.action.binding.begin(), g.action.binding.end(), o.existing) !=
          g.action.binding.end()) {
        return std::nullopt;
      }
      g.action.binding.push_back(o.existing);
    }
  }
  return g;
}

std::string lowercase(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

WorldState with_entities(const WorldState& s, const std::vector<Entity>& entities) {
  WorldState out;
  for (const auto& e : entities) out.add_entity(e);
  for (const auto& f : s.facts()) out.insert(f);
  return out;
}

}  // namespace

void GenerationConfig::validate() const {
  if (length == 0) throw ConfigError("generation length must be at least 1");
}

std::optional<Grounding> instantiate_action(const DomainDefinition& dom,
                                            const WorldState& state,
                                            ActionId action,
                                            const ResolvedWeights& weights,
                                            const GenerationConfig& cfg,
                                            std::size_t created_so_far, Rng& rng) {
  const auto& schema = dom.action(action);
  const std::size_t remaining =
      created_so_far >= cfg.max_entities ? 0 : cfg.max_entities - created_so_far;

  std::vector<std::vector<Option>> opts;
  opts.reserve(schema.params.size());
  std::size_t joint = 1;
  for (const auto& p : schema.params) {
    opts.push_back(parameter_options(dom, state, p.cls, weights, remaining > 0));
    if (opts.back().empty()) return std::nullopt;
    joint = std::min(joint * opts.back().size(), kMaxJointCandidates + 1);
  }

  std::size_t tried = 0;
  auto accept = [&](std::optional<Grounding>& g) {
    ++tried;
    if (!preconditions_hold(dom, state, action, g->action.binding)) return false;
    g->tried = tried;
    return true;
  };

  if (joint > kMaxJointCandidates) {
    for (std::size_t draw = 0; draw < cfg.resample_budget; ++draw) {
      std::vector<std::uint32_t> choice;
      for (const auto& o : opts) {
        std::vector<double> ws;
        for (const auto& x : o) ws.push_back(x.weight);
        choice.push_back(static_cast<std::uint32_t>(sample_index(ws, rng)));
      }
      auto g = resolve_choice(state, opts, choice, action, remaining);
      if (g && accept(g)) return g;
    }
    return std::nullopt;
  }

  // Enumerate the product of parameter options; weight = product of
  // per-parameter probabilities.
  std::vector<Candidate> cands;
  std::vector<std::uint32_t> choice(opts.size(), 0);
  while (true) {
    double weight = 1.0;
    for (std::size_t p = 0; p < opts.size(); ++p) weight *= opts[p][choice[p]].weight;
    if (weight > 0.0 && resolve_choice(state, opts, choice, action, remaining)) {
      cands.push_back({choice, weight});
    }
    std::size_t p = 0;
    while (p < opts.size() && ++choice[p] == opts[p].size()) choice[p++] = 0;
    if (p == opts.size()) break;
  }

  // Weighted draws without replacement.
  std::vector<double> ws(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) ws[i] = cands[i].weight;
  for (std::size_t draw = 0; draw < cfg.resample_budget && draw < cands.size(); ++draw) {
    std::size_t pick;
    try {
      pick = sample_index(ws, rng);
    } catch (const SamplingError&) {
      break;
    }
    ws[pick] = 0.0;
    auto g = resolve_choice(state, opts, cands[pick].choice, action, remaining);
    if (accept(g)) return g;
  }
  return std::nullopt;
}

void materialize(const DomainDefinition& dom, WorldState& state, const Grounding& g) {
  std::map<ClassId, std::size_t> per_class;
  for (const auto& e : state.entities()) ++per_class[e.cls];
  for (auto e : g.created) {
    const auto n = ++per_class[e.cls];
    e.name = lowercase(dom.hierarchy.name(e.cls)) + "_" + std::to_string(n);
    state.add_entity(std::move(e));
  }
}

GenerationResult generate_sequence(const DomainDefinition& dom,
                                   const ResolvedWeights& weights,
                                   const GenerationConfig& cfg) {
  cfg.validate();
  if (weights.action.size() != dom.actions.size()) {
    throw ConfigError("weights were resolved against a different domain");
  }
  std::vector<ActionId> enabled;
  for (ActionId a = 0; a < dom.actions.size(); ++a) {
    if (weights.action[a] > 0.0) enabled.push_back(a);
  }
  if (enabled.empty()) {
    throw ConfigError("no action has a positive sampling weight");
  }

  GenerationResult result;
  auto& trace = result.trace;
  Rng rng(cfg.seed);

  const WorldState initial = make_initial_state(dom);
  const std::size_t initial_entities = initial.entity_count();
  std::vector<WorldState> states{initial};
  std::vector<GroundAction> sequence;

  while (sequence.size() < cfg.length) {
    const std::size_t step = sequence.size();
    const WorldState& current = states.back();
    const std::optional<ActionId> prev =
        sequence.empty() ? std::nullopt : std::optional<ActionId>(sequence.back().action);
    std::vector<ActionId> candidates = enabled;
    bool accepted = false;

    for (std::size_t attempt = 0; attempt < cfg.resample_budget && !candidates.empty();
         ++attempt) {
      ActionId a;
      try {
        a = sample_action(weights, prev, candidates, rng);
      } catch (const SamplingError&) {
        trace.events.push_back({TraceEventKind::kZeroWeight, step, std::nullopt, 0});
        break;
      }
      auto g = instantiate_action(dom, current, a, weights, cfg,
                                  current.entity_count() - initial_entities, rng);
      if (!g) {
        trace.events.push_back({TraceEventKind::kNoGrounding, step, a, 0});
        candidates.erase(std::find(candidates.begin(), candidates.end(), a));
        continue;
      }
      WorldState next = current;
      materialize(dom, next, *g);
      next = apply_postconditions(dom, next, g->action);
      TraceEvent ev{TraceEventKind::kAccepted, step, a, g->tried};
      trace.events.push_back(ev);
      trace.accepted.push_back(ev);
      sequence.push_back(std::move(g->action));
      states.push_back(std::move(next));
      accepted = true;
      break;
    }
    if (accepted) continue;

    trace.events.push_back({TraceEventKind::kStepExhausted, step, std::nullopt, 0});
    if (sequence.empty() || trace.backtracks >= cfg.backtrack_budget) {
      return result;
    }
    ++trace.backtracks;
    trace.events.push_back({TraceEventKind::kBacktrack, step, sequence.back().action, 0});
    trace.accepted.pop_back();
    sequence.pop_back();
    states.pop_back();
  }

  // Every state carries the final entity table so the chain is exact.
  TaskSpec task;
  task.seed = cfg.seed;
  const auto& entities = states.back().entities();
  for (const auto& s : states) task.states.push_back(with_entities(s, entities));
  task.sequence = std::move(sequence);
  for (std::size_t i = initial_entities; i < entities.size(); ++i) {
    task.created.push_back(EntityId{static_cast<std::uint32_t>(i)});
  }
  result.task = std::move(task);
  return result;
}

std::string sequence_key(const TaskSpec& task) {
  std::ostringstream os;
  for (std::size_t i = 0; i < task.sequence.size(); ++i) {
    if (i) os << ' ';
    os << task.sequence[i].action << '(';
    for (std::size_t k = 0; k < task.sequence[i].binding.size(); ++k) {
      if (k) os << ',';
      const auto id = task.sequence[i].binding[k];
      os << id.value;
      if (!task.states.empty() && task.states.back().has_entity(id)) {
        os << ':' << task.states.back().entity(id).cls;
      }
    }
    os << ')';
  }
  return os.str();
}

}  // namespace taskforge
