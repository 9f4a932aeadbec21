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

#include <atomic>
#include <fstream>
#include <ostream>
#include <thread>

#include "taskforge/cli/commands.hpp"
#include "taskforge/data/export.hpp"
#include "taskforge/data/hash.hpp"
#include "taskforge/data/record.hpp"
#include "taskforge/model/semantics.hpp"
#include "taskforge/phys/checker.hpp"
#include "taskforge/phys/validator.hpp"

namespace taskforge::cli {

namespace {

std::vector<data::Atom> atoms(const DomainDefinition& dom, const WorldState& names,
                              const FactSet& facts) {
  std::vector<data::Atom> out;
  for (const auto& f : facts) out.push_back(data::to_atom(dom, names, f));
  return out;
}

// Empty on success, otherwise the first problem found.
std::string check_record(const LoadedInputs& in, const std::string& dom_hash,
                         const data::TaskRecord& rec) {
  if (rec.domain_hash != dom_hash) return "domain hash differs from the given domain";
  TaskSpec task;
  try {
    task = data::task_from_record(in.domain, rec);
  } catch (const data::FormatError& e) {
    return e.what();
  }
  if (auto problems = revalidate_task(in.domain, task); !problems.empty()) return problems[0];
  if (rec.subgoals.size() != task.length()) return "subgoal count differs from action count";
  const auto& names = task.final_state();
  for (std::size_t i = 0; i < task.length(); ++i) {
    const auto diff = state_diff(task.states[i], task.states[i + 1]);
    const auto& sg = rec.subgoals[i];
    if (sg.initial != atoms(in.domain, names, task.states[i].facts()) ||
        sg.goal != atoms(in.domain, names, diff.added) ||
        sg.removed != atoms(in.domain, names, diff.removed)) {
      return "state chain broken at step " + std::to_string(i + 1);
    }
  }
  if (rec.final_facts != atoms(in.domain, names, names.facts())) {
    return "final state does not follow from the actions";
  }
  if (rec.id != data::task_id(rec.domain_hash, rec.seed, rec.actions)) return "task id mismatch";

  phys::PhysicsSetup setup = *in.physics;
  setup.max_attempts = rec.meta.max_attempts;
  const auto report = phys::validate_task(in.domain, task, setup, rec.seed);
  if (report.feasible() != rec.viable) return "viability verdict does not reproduce";
  for (std::size_t i = 0; i < report.subgoals.size(); ++i) {
    const auto& v = report.subgoals[i];
    if (!v.scene) continue;
    if (auto problems = phys::recheck_scene(in.domain, task.states[i], setup, *v.scene);
        !problems.empty()) {
      return "scene " + std::to_string(i) + ": " + problems[0];
    }
  }
  double lambda = 0.0;
  for (const auto& sg : rec.subgoals) {
    if (sg.reward) {
      lambda = sg.reward->lambda;
      break;
    }
  }
  const auto rebuilt = data::build_record(in.domain, dom_hash, task, report, setup, rec.meta, lambda);
  if (rebuilt.viability != rec.viability) return "spawned scenes do not reproduce";
  if (rebuilt != rec) return "record contents do not reproduce";
  return {};
}

}  // namespace

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& log) {
  LoadedInputs in;
  std::vector<data::TaskRecord> records;
  try {
    in = load_inputs(resolve_paths(opts.inputs), true, log);
    std::ifstream file(opts.dataset, std::ios::binary);
    if (!file) {
      log << "error: cannot open '" << opts.dataset << "'\n";
      return kExitConfig;
    }
    records = data::import_tasks(file);
  } catch (const data::SchemaError& e) {
    log << "error: schema version mismatch: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  const std::string dom_hash = data::domain_hash(in.domain);
  std::vector<std::string> problems(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        problems[i] = check_record(in, dom_hash, records[i]);
      } catch (const std::exception& e) {
        problems[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, opts.workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::size_t failed = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (problems[i].empty()) continue;
    ++failed;
    out << "FAIL " << records[i].id << " (record " << i + 1 << "): " << problems[i] << '\n';
  }
  out << records.size() - failed << " of " << records.size() << " records pass\n";
  return failed ? kExitValidation : kExitOk;
}

}  // namespace taskforge::cli
