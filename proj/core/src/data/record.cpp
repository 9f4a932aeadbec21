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

#include "taskforge/data/record.hpp"

#include <nlohmann/json.hpp>

#include "taskforge/data/hash.hpp"
#include "taskforge/data/reward.hpp"
#include "taskforge/errors.hpp"
#include "taskforge/model/semantics.hpp"

namespace taskforge::data {

using nlohmann::json;

namespace {

std::vector<Atom> atoms(const DomainDefinition& dom, const WorldState& state, const FactSet& facts) {
  std::vector<Atom> out;
  out.reserve(facts.size());
  for (const auto& f : facts) out.push_back(to_atom(dom, state, f));
  return out;
}

json reward_json(const RewardScaffold& s) {
  return {{"manipulated", s.manipulated},
          {"goal_center", s.goal_center},
          {"normalizer", s.normalizer},
          {"sparse_bonus", s.sparse_bonus},
          {"lambda", s.lambda}};
}

RewardScaffold reward_from(const json& j) {
  RewardScaffold s;
  j.at("manipulated").get_to(s.manipulated);
  j.at("goal_center").get_to(s.goal_center);
  j.at("normalizer").get_to(s.normalizer);
  j.at("sparse_bonus").get_to(s.sparse_bonus);
  j.at("lambda").get_to(s.lambda);
  return s;
}

EntityId resolve(const std::map<std::string, EntityId>& names, const std::string& name) {
  auto it = names.find(name);
  if (it == names.end()) throw FormatError("unknown entity '" + name + "'");
  return it->second;
}

}  // namespace

std::string task_id(std::string_view domain_hash, std::uint64_t seed,
                    const std::vector<Atom>& actions) {
  std::string text(domain_hash);
  text += '\n';
  text += std::to_string(seed);
  for (const auto& a : actions) {
    text += '\n';
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) text += ' ';
      text += a[i];
    }
  }
  return sha256_hex(text);
}

Atom to_atom(const DomainDefinition& dom, const WorldState& state, const GroundPredicate& fact) {
  Atom a{dom.predicate(fact.predicate).name};
  for (auto e : fact.args) a.push_back(state.entity(e).name);
  return a;
}

Atom to_atom(const DomainDefinition& dom, const WorldState& state, const GroundAction& action) {
  Atom a{dom.action(action.action).name};
  for (auto e : action.binding) a.push_back(state.entity(e).name);
  return a;
}

TaskRecord build_record(const DomainDefinition& dom, std::string_view domain_hash,
                        const TaskSpec& task, const phys::ViabilityReport& report,
                        const phys::PhysicsSetup& setup, const GenerationMeta& meta,
                        double lambda) {
  TaskRecord rec;
  rec.domain_name = dom.name;
  rec.domain_hash = std::string(domain_hash);
  rec.seed = task.seed;
  const auto& final_state = task.final_state();
  for (const auto& e : final_state.entities()) {
    rec.entities.push_back({e.name, dom.hierarchy.name(e.cls)});
  }
  for (const auto& a : task.sequence) rec.actions.push_back(to_atom(dom, final_state, a));

  std::vector<std::optional<phys::SceneState>> scenes;
  for (const auto& v : report.subgoals) scenes.push_back(v.scene);
  const auto rewards = reward_scaffold(dom, task, scenes, setup, lambda);
  for (std::size_t i = 0; i < task.length(); ++i) {
    const auto diff = state_diff(task.states[i], task.states[i + 1]);
    SubgoalRecord sg;
    sg.initial = atoms(dom, final_state, task.states[i].facts());
    sg.goal = atoms(dom, final_state, diff.added);
    sg.removed = atoms(dom, final_state, diff.removed);
    sg.reward = rewards[i];
    if (!sg.reward) rec.reward_incomplete = true;
    rec.subgoals.push_back(std::move(sg));
  }
  rec.final_facts = atoms(dom, final_state, final_state.facts());
  rec.viable = report.feasible();
  for (const auto& v : report.subgoals) {
    VerdictRecord vr;
    vr.feasible = v.feasible;
    vr.attempts = v.attempts;
    vr.failure = std::string(phys::failure_name(v.failure));
    vr.detail = v.detail;
    if (v.scene) {
      for (const auto& [id, pe] : v.scene->placements) {
        const auto p = pe.pose.position;
        vr.poses[final_state.entity(id).name] = {p.x, p.y, p.z};
      }
    }
    rec.viability.push_back(std::move(vr));
  }
  rec.meta = meta;
  rec.id = task_id(rec.domain_hash, rec.seed, rec.actions);
  return rec;
}

TaskSpec task_from_record(const DomainDefinition& dom, const TaskRecord& rec) {
  WorldState initial;
  std::map<std::string, EntityId> names;
  for (const auto& e : rec.entities) {
    auto cls = dom.hierarchy.find(e.cls);
    if (!cls) throw FormatError("unknown class '" + e.cls + "'");
    if (names.count(e.name)) throw FormatError("duplicate entity '" + e.name + "'");
    names[e.name] = initial.add_entity({e.name, *cls});
  }
  auto fact_of = [&](const Atom& a) {
    if (a.empty()) throw FormatError("empty fact");
    auto pid = dom.find_predicate(a[0]);
    if (!pid) throw FormatError("unknown predicate '" + a[0] + "'");
    std::vector<EntityId> args;
    for (std::size_t i = 1; i < a.size(); ++i) args.push_back(resolve(names, a[i]));
    return make_fact(dom, initial, *pid, std::move(args));
  };
  try {
    const auto& first = rec.subgoals.empty() ? rec.final_facts : rec.subgoals.front().initial;
    for (const auto& a : first) initial.insert(fact_of(a));
    TaskSpec task;
    task.seed = rec.seed;
    task.states.push_back(initial);
    for (const auto& a : rec.actions) {
      if (a.empty()) throw FormatError("empty action");
      std::vector<EntityId> binding;
      for (std::size_t i = 1; i < a.size(); ++i) binding.push_back(resolve(names, a[i]));
      auto ga = make_action(dom, initial, a[0], std::move(binding));
      const auto check = check_preconditions(dom, task.states.back(), ga);
      if (!check.ok()) {
        throw FormatError("precondition " + to_string(dom, task.states.back(), check.violated[0]) +
                          " of " + to_string(dom, task.states.back(), ga) + " does not hold");
      }
      task.states.push_back(apply_postconditions(dom, task.states.back(), ga));
      task.sequence.push_back(std::move(ga));
    }
    return task;
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

std::string to_json_line(const TaskRecord& rec) {
  json subgoals = json::array();
  for (const auto& sg : rec.subgoals) {
    json j = {{"initial", sg.initial}, {"goal", sg.goal}, {"removed", sg.removed}};
    j["reward"] = sg.reward ? reward_json(*sg.reward) : json(nullptr);
    subgoals.push_back(std::move(j));
  }
  json viability = json::array();
  for (const auto& v : rec.viability) {
    json poses = json::object();
    for (const auto& [name, p] : v.poses) poses[name] = p;
    viability.push_back({{"feasible", v.feasible},
                         {"attempts", v.attempts},
                         {"failure", v.failure},
                         {"detail", v.detail},
                         {"poses", std::move(poses)}});
  }
  json entities = json::array();
  for (const auto& e : rec.entities) entities.push_back({{"name", e.name}, {"class", e.cls}});
  const json j = {
      {"schema_version", rec.schema_version},
      {"id", rec.id},
      {"domain", {{"name", rec.domain_name}, {"hash", rec.domain_hash}}},
      {"seed", rec.seed},
      {"entities", std::move(entities)},
      {"actions", rec.actions},
      {"subgoals", std::move(subgoals)},
      {"final_facts", rec.final_facts},
      {"viable", rec.viable},
      {"viability", std::move(viability)},
      {"reward_incomplete", rec.reward_incomplete},
      {"meta",
       {{"task_index", rec.meta.task_index},
        {"max_entities", rec.meta.max_entities},
        {"resample_budget", rec.meta.resample_budget},
        {"backtrack_budget", rec.meta.backtrack_budget},
        {"max_attempts", rec.meta.max_attempts},
        {"tool_version", rec.meta.tool_version}}},
  };
  return j.dump();
}

TaskRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed record: ") + e.what());
  }
  try {
    TaskRecord rec;
    rec.schema_version = j.at("schema_version").get<int>();
    if (rec.schema_version != kSchemaVersion) {
      throw SchemaError("schema version " + std::to_string(rec.schema_version) +
                        " is not supported (expected " + std::to_string(kSchemaVersion) + ")");
    }
    j.at("id").get_to(rec.id);
    j.at("domain").at("name").get_to(rec.domain_name);
    j.at("domain").at("hash").get_to(rec.domain_hash);
    j.at("seed").get_to(rec.seed);
    for (const auto& e : j.at("entities")) {
      rec.entities.push_back({e.at("name").get<std::string>(), e.at("class").get<std::string>()});
    }
    j.at("actions").get_to(rec.actions);
    for (const auto& s : j.at("subgoals")) {
      SubgoalRecord sg;
      s.at("initial").get_to(sg.initial);
      s.at("goal").get_to(sg.goal);
      s.at("removed").get_to(sg.removed);
      if (!s.at("reward").is_null()) sg.reward = reward_from(s.at("reward"));
      rec.subgoals.push_back(std::move(sg));
    }
    j.at("final_facts").get_to(rec.final_facts);
    j.at("viable").get_to(rec.viable);
    for (const auto& v : j.at("viability")) {
      VerdictRecord vr;
      v.at("feasible").get_to(vr.feasible);
      v.at("attempts").get_to(vr.attempts);
      v.at("failure").get_to(vr.failure);
      v.at("detail").get_to(vr.detail);
      for (const auto& [name, p] : v.at("poses").items()) vr.poses[name] = p.get<Point>();
      rec.viability.push_back(std::move(vr));
    }
    j.at("reward_incomplete").get_to(rec.reward_incomplete);
    const auto& m = j.at("meta");
    m.at("task_index").get_to(rec.meta.task_index);
    m.at("max_entities").get_to(rec.meta.max_entities);
    m.at("resample_budget").get_to(rec.meta.resample_budget);
    m.at("backtrack_budget").get_to(rec.meta.backtrack_budget);
    m.at("max_attempts").get_to(rec.meta.max_attempts);
    m.at("tool_version").get_to(rec.meta.tool_version);
    return rec;
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid record: ") + e.what());
  }
}

}  // namespace taskforge::data
