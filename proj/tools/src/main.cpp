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

#include <iostream>

#include <CLI11.hpp>

#include "taskforge/cli/commands.hpp"

namespace {

void add_inputs(CLI::App* cmd, taskforge::cli::InputPaths& p, bool physics) {
  cmd->add_option("--domain", p.domain, "Domain file (PDDL subset)");
  cmd->add_option("--weights", p.weights, "Sampling weights file");
  if (physics) {
    cmd->add_option("--shapes", p.shapes, "Entity shapes file");
    cmd->add_option("--rules", p.rules, "Spawn rules file");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace taskforge::cli;
  CLI::App app{"Procedural generator of symbolically valid, physically viable manipulation tasks"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.footer(std::string("Without --domain, config files are read from $") + kConfigDirEnv +
             " (domain.pddl, weights.cfg, shapes.cfg, rules.cfg).\n"
             "Exit codes: 0 ok, 2 configuration error, 3 budget exhausted, 4 validation failed.");

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Generate viable tasks as JSON lines");
  add_inputs(g, gen.inputs, true);
  g->add_option("--n", gen.n, "Number of viable tasks")->capture_default_str();
  g->add_option("--len-min", gen.len_min, "Shortest sequence length")->capture_default_str();
  g->add_option("--len-max", gen.len_max, "Longest sequence length")->capture_default_str();
  g->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  g->add_option("--workers", gen.workers, "Worker threads")->capture_default_str();
  g->add_option("--out", gen.out, "Output dataset path")->required();
  g->add_option("--max-attempts", gen.max_attempts, "Spawn attempts per subgoal")
      ->capture_default_str();
  g->add_option("--max-entities", gen.max_entities, "Entities a task may create")
      ->capture_default_str();
  g->add_option("--budget", gen.budget, "Task attempts before giving up (0: 50n+100)")
      ->capture_default_str();
  g->add_option("--lambda", gen.lambda, "Dense-to-sparse reward mix")->capture_default_str();

  CountOptions cnt;
  auto* c = app.add_subcommand("count", "Count action sequences of a given length");
  add_inputs(c, cnt.inputs, false);
  c->add_option("--length", cnt.length, "Sequence length")->required();
  c->add_flag("--oracle", cnt.oracle, "Also enumerate valid sequences exactly");
  c->add_option("--max-entities", cnt.max_entities, "Entities a sequence may create")
      ->capture_default_str();
  c->add_option("--ceiling", cnt.ceiling, "Refuse enumerations estimated above this many nodes")
      ->capture_default_str();

  ValidateOptions val;
  auto* v = app.add_subcommand("validate", "Re-check every record of a dataset");
  add_inputs(v, val.inputs, true);
  v->add_option("dataset", val.dataset, "Dataset file")->required();
  v->add_option("--workers", val.workers, "Worker threads")->capture_default_str();

  SimilarityOptions sim;
  auto* s = app.add_subcommand("similarity", "Pairwise task similarity matrix (TSV)");
  s->add_option("dataset", sim.dataset, "Dataset file")->required();
  s->add_option("--out", sim.out, "Output path, - for stdout")->capture_default_str();
  s->add_option("--workers", sim.workers, "Worker threads")->capture_default_str();
  s->add_option("--seq-weight", sim.seq_weight, "Weight of the action-sequence term")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (*g) return cmd_generate(gen, std::cerr);
  if (*c) return cmd_count(cnt, std::cout, std::cerr);
  if (*v) return cmd_validate(val, std::cout, std::cerr);
  return cmd_similarity(sim, std::cout, std::cerr);
}
