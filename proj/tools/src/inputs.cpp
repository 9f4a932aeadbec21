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

#include "taskforge/cli/inputs.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "taskforge/data/hash.hpp"
#include "taskforge/dsl/parser.hpp"
#include "taskforge/dsl/sidecar.hpp"
#include "taskforge/errors.hpp"

namespace taskforge::cli {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputPaths resolve_paths(const InputPaths& given) {
  const char* env = std::getenv(kConfigDirEnv);
  const fs::path dir = env && *env ? fs::path(env) : fs::path(TASKFORGE_DEFAULT_CONFIG_DIR);
  InputPaths p = given;
  auto fill = [&](std::optional<std::string>& slot, const char* file, bool optional) {
    if (slot) return;
    const fs::path candidate = dir / file;
    if (!optional || fs::exists(candidate)) slot = candidate.string();
  };
  // Sidecars only come from the config dir along with its domain file.
  if (given.domain) return p;
  fill(p.domain, "domain.pddl", false);
  fill(p.weights, "weights.cfg", true);
  fill(p.shapes, "shapes.cfg", true);
  fill(p.rules, "rules.cfg", true);
  return p;
}

namespace {

template <typename T>
T unwrap(dsl::ParseResult<T> r, const std::string& path, std::ostream& log) {
  for (const auto& d : r.diagnostics) log << dsl::format(d, path) << '\n';
  if (!r.ok()) throw ConfigError("failed to parse '" + path + "'");
  return std::move(*r.value);
}

}  // namespace

LoadedInputs load_inputs(const InputPaths& paths, bool need_physics, std::ostream& log) {
  LoadedInputs in;
  in.paths = paths;
  if (!paths.domain) throw ConfigError("no domain file given");
  const std::string domain_text = read_file(*paths.domain);
  in.hashes["domain"] = data::sha256_hex(domain_text);
  in.domain = unwrap(dsl::parse_domain(domain_text), *paths.domain, log);

  std::optional<dsl::SamplingWeights> weights;
  if (paths.weights) {
    const std::string text = read_file(*paths.weights);
    in.hashes["weights"] = data::sha256_hex(text);
    weights = unwrap(dsl::parse_weights(text), *paths.weights, log);
  }
  const auto diags = dsl::validate_domain(in.domain, weights ? &*weights : nullptr);
  for (const auto& d : diags) log << dsl::format(d, *paths.domain) << '\n';
  if (dsl::has_errors(diags)) throw ConfigError("domain '" + *paths.domain + "' is invalid");
  in.weights = weights ? resolve_weights(in.domain, *weights) : uniform_weights(in.domain);

  if (paths.shapes && paths.rules) {
    const std::string shapes_text = read_file(*paths.shapes);
    const std::string rules_text = read_file(*paths.rules);
    in.hashes["shapes"] = data::sha256_hex(shapes_text);
    in.hashes["rules"] = data::sha256_hex(rules_text);
    const auto shapes = unwrap(dsl::parse_shapes(shapes_text), *paths.shapes, log);
    const auto rules = unwrap(dsl::parse_rules(rules_text), *paths.rules, log);
    phys::apply_rule_kinds(in.domain, rules);
    in.physics = phys::resolve_physics(in.domain, shapes, rules);
  } else if (need_physics) {
    throw ConfigError("shapes and rules files are required");
  }
  return in;
}

}  // namespace taskforge::cli
