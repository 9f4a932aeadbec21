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

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "manifest.hpp"
#include "taskforge/cli/commands.hpp"
#include "taskforge/data/export.hpp"
#include "taskforge/data/hash.hpp"
#include "taskforge/data/record.hpp"
#include "taskforge/errors.hpp"
#include "taskforge/gen/generator.hpp"
#include "taskforge/model/semantics.hpp"
#include "taskforge/phys/checker.hpp"
#include "taskforge/phys/validator.hpp"

namespace taskforge::cli {

namespace {

using nlohmann::json;

// Reference viability rate, logged for comparison and never enforced.
constexpr double kReferenceViability = 0.783;

struct Attempt {
  bool generated = false;
  bool chain_ok = true;
  bool viable = false;
  std::string failure = "none";
  std::optional<data::TaskRecord> record;
  std::string grounded_key;
  std::string lifted_key;
  double symbolic_ms = 0.0;
  double physical_ms = 0.0;
};

std::string lifted_key(const DomainDefinition& dom, const TaskSpec& task) {
  std::string key;
  const auto& st = task.final_state();
  for (const auto& a : task.sequence) {
    key += dom.action(a.action).name + "(";
    for (std::size_t i = 0; i < a.binding.size(); ++i) {
      if (i) key += ',';
      key += dom.hierarchy.name(st.entity(a.binding[i]).cls);
    }
    key += ") ";
  }
  return key;
}

Attempt run_attempt(const LoadedInputs& in, const GenerateOptions& opts,
                    const std::string& dom_hash, std::uint64_t index) {
  Attempt at;
  const std::uint64_t task_seed = derive_seed(opts.seed, index);
  Rng length_rng(derive_seed(task_seed, 0x6c656e));
  GenerationConfig cfg;
  cfg.length = opts.len_min + length_rng.below(opts.len_max - opts.len_min + 1);
  cfg.max_entities = opts.max_entities;
  cfg.seed = task_seed;

  Stopwatch sym;
  auto result = generate_sequence(in.domain, in.weights, cfg);
  if (result.ok()) at.chain_ok = revalidate_task(in.domain, *result.task).empty();
  at.symbolic_ms = sym.ms();
  if (!result.ok()) return at;
  at.generated = true;
  const TaskSpec& task = *result.task;

  Stopwatch phys_clock;
  const auto report = phys::validate_task(in.domain, task, *in.physics, task_seed);
  // Spawned scenes must also satisfy the independent geometric checker.
  bool scenes_ok = true;
  for (std::size_t i = 0; i < report.subgoals.size() && scenes_ok; ++i) {
    const auto& v = report.subgoals[i];
    if (v.scene) {
      scenes_ok = phys::recheck_scene(in.domain, task.states[i], *in.physics, *v.scene).empty();
    }
  }
  at.physical_ms = phys_clock.ms();
  at.viable = report.feasible() && at.chain_ok && scenes_ok;
  if (auto f = report.first_failure()) {
    at.failure = std::string(phys::failure_name(report.subgoals[*f].failure));
  } else if (!at.chain_ok) {
    at.failure = "symbolic";
  } else if (!scenes_ok) {
    at.failure = "recheck";
  }
  if (!at.viable) return at;

  data::GenerationMeta meta;
  meta.task_index = index;
  meta.max_entities = cfg.max_entities;
  meta.resample_budget = cfg.resample_budget;
  meta.backtrack_budget = cfg.backtrack_budget;
  meta.max_attempts = in.physics->max_attempts;
  meta.tool_version = std::string(tool_version());
  at.record = data::build_record(in.domain, dom_hash, task, report, *in.physics, meta, opts.lambda);
  at.grounded_key = sequence_key(task);
  at.lifted_key = lifted_key(in.domain, task);
  return at;
}

json config_json(const GenerateOptions& opts, const InputPaths& paths, std::size_t budget) {
  auto path = [](const std::optional<std::string>& p) { return p ? json(*p) : json(nullptr); };
  const GenerationConfig defaults;
  return {{"n", opts.n},
          {"len_min", opts.len_min},
          {"len_max", opts.len_max},
          {"seed", opts.seed},
          {"workers", opts.workers},
          {"out", opts.out},
          {"max_attempts", opts.max_attempts},
          {"max_entities", opts.max_entities},
          {"resample_budget", defaults.resample_budget},
          {"backtrack_budget", defaults.backtrack_budget},
          {"budget", budget},
          {"lambda", opts.lambda},
          {"domain", path(paths.domain)},
          {"weights", path(paths.weights)},
          {"shapes", path(paths.shapes)},
          {"rules", path(paths.rules)}};
}

}  // namespace

int cmd_generate(const GenerateOptions& opts, std::ostream& log) {
  Stopwatch total;
  const std::size_t budget = opts.budget ? opts.budget : 50 * opts.n + 100;
  const InputPaths paths = resolve_paths(opts.inputs);
  json manifest = {{"tool", "taskforge"},
                   {"tool_version", tool_version()},
                   {"command", "generate"},
                   {"config", config_json(opts, paths, budget)}};
  json timings = json::object();
  auto finish = [&](int code, const std::string& status) {
    timings["total"] = total.ms();
    manifest["timings_ms"] = timings;
    manifest["exit_code"] = code;
    manifest["status"] = status;
    if (!opts.out.empty() && !write_manifest(manifest_path(opts.out), manifest)) {
      log << "error: cannot write manifest " << manifest_path(opts.out) << '\n';
    }
    return code;
  };

  if (opts.out.empty()) {
    log << "error: --out is required\n";
    return kExitConfig;
  }
  LoadedInputs in;
  try {
    if (opts.len_min < 1 || opts.len_max < opts.len_min) {
      throw ConfigError("length range must satisfy 1 <= len-min <= len-max");
    }
    if (opts.max_attempts < 1) throw ConfigError("--max-attempts must be at least 1");
    if (opts.lambda < 0.0 || opts.lambda > 1.0) throw ConfigError("--lambda must be in [0, 1]");
    Stopwatch load;
    in = load_inputs(paths, true, log);
    in.physics->max_attempts = opts.max_attempts;
    timings["load"] = load.ms();
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    manifest["error"] = e.what();
    return finish(kExitConfig, "config-error");
  }
  json hashes = json::object();
  for (const auto& [k, v] : in.hashes) hashes[k] = v;
  manifest["input_hashes"] = hashes;
  const std::string dom_hash = data::domain_hash(in.domain);
  manifest["domain_hash"] = dom_hash;

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<data::TaskRecord> records;
  std::size_t attempted = 0, generated = 0, viable = 0, chain_failures = 0;
  std::map<std::string, std::size_t> failures;
  std::set<std::string> grounded, lifted;
  double symbolic_ms = 0.0, physical_ms = 0.0;
  std::string error;

  try {
    while (records.size() < opts.n && attempted < budget) {
      const std::size_t batch = std::min<std::size_t>(
          budget - attempted, std::max<std::size_t>(16 * workers, 2 * (opts.n - records.size())));
      std::vector<Attempt> results(batch);
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mu;
      auto work = [&] {
        try {
          for (std::size_t i = next++; i < batch; i = next++) {
            results[i] = run_attempt(in, opts, dom_hash, attempted + i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = batch;
        }
      };
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < std::min<std::size_t>(workers, batch); ++w) pool.emplace_back(work);
      work();
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);

      // Merge in index order so the output does not depend on scheduling.
      for (auto& at : results) {
        if (records.size() >= opts.n) break;
        ++attempted;
        symbolic_ms += at.symbolic_ms;
        physical_ms += at.physical_ms;
        if (!at.generated) continue;
        ++generated;
        if (!at.chain_ok) ++chain_failures;
        if (!at.viable) {
          ++failures[at.failure];
          continue;
        }
        ++viable;
        grounded.insert(at.grounded_key);
        lifted.insert(at.lifted_key);
        records.push_back(std::move(*at.record));
      }
    }
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    manifest["error"] = e.what();
    return finish(kExitConfig, "config-error");
  }
  timings["symbolic_cpu"] = symbolic_ms;
  timings["physical_cpu"] = physical_ms;

  Stopwatch export_clock;
  int code = records.size() < opts.n ? kExitExhausted : kExitOk;
  {
    std::ofstream sink(opts.out, std::ios::binary | std::ios::trunc);
    try {
      if (!sink) throw data::IoError("cannot open '" + opts.out + "'", 0);
      data::export_tasks(records, sink);
    } catch (const data::IoError& e) {
      log << "error: " << e.what() << " (" << e.written() << " records written)\n";
      manifest["error"] = e.what();
      code = kExitConfig;
    }
  }
  timings["export"] = export_clock.ms();

  const double rate = generated ? static_cast<double>(viable) / static_cast<double>(generated) : 0.0;
  json fail_json = json::object();
  for (const auto& [k, v] : failures) fail_json[k] = v;
  manifest["stats"] = {{"attempted", attempted},
                       {"generated", generated},
                       {"symbolically_valid", generated - chain_failures},
                       {"physically_viable", viable},
                       {"viability_rate", rate},
                       {"reference_viability_rate", kReferenceViability},
                       {"records_written", records.size()},
                       {"unique_grounded", grounded.size()},
                       {"unique_lifted", lifted.size()},
                       {"failures_by_kind", fail_json}};
  log << "generated " << generated << " symbolically valid tasks, " << viable
      << " physically viable (rate " << rate << "; reference " << kReferenceViability << ")\n";
  if (code == kExitExhausted) {
    log << "error: budget of " << budget << " attempts exhausted with " << records.size() << " of "
        << opts.n << " tasks\n";
    return finish(code, "exhausted");
  }
  return finish(code, code == kExitOk ? "ok" : "io-error");
}

}  // namespace taskforge::cli
