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

#ifndef TASKFORGE_DSL_SIDECAR_HPP_
#define TASKFORGE_DSL_SIDECAR_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taskforge/dsl/diagnostic.hpp"
#include "taskforge/phys/geometry.hpp"

namespace taskforge::dsl {

/// Sampling biases, keyed by names so a weights file can be parsed without
/// its domain. Missing entries default to 1.0 and reuse_prob to 0.5.
struct SamplingWeights {
  std::map<std::string, double, std::less<>> action;
  std::map<std::pair<std::string, std::string>, double> pair;
  std::map<std::string, double, std::less<>> entity;
  double reuse_prob = 0.5;

  /// Location of each entry, keyed "action NAME", "pair A B", "entity C".
  std::map<std::string, SourceSpan, std::less<>> spans;

  double action_weight(std::string_view name) const;
  double pair_weight(std::string_view prev, std::string_view next) const;
  double entity_weight(std::string_view cls) const;
};

/// Line format, `#` comments:
///   action <name> <w>
///   pair <prev> <next> <w>
///   entity <class> <w>
///   reuse_prob <p>
ParseResult<SamplingWeights> parse_weights(std::string_view text);

struct ShapesConfig {
  std::vector<std::pair<std::string, phys::Shape>> shapes;  // declaration order
  std::map<std::string, phys::Vec3, std::less<>> fixed;
  std::optional<phys::RobotModel> robot;
  std::optional<phys::Aabb> workspace;
  std::map<std::string, SourceSpan, std::less<>> spans;  // by class name
};

/// Line format, meters, `#` comments:
///   shape <class> box <dx> <dy> <dz>
///   shape <class> sphere <r>
///   fixed <class> <x> <y> <z>          fixed pose for a (singleton) class
///   robot <bx> <by> <bz> <reach> [<ox> <oy> <oz>]
///   workspace <x0> <y0> <z0> <x1> <y1> <z1>
ParseResult<ShapesConfig> parse_shapes(std::string_view text);

struct SpawnRule {
  std::string predicate;
  phys::VolumeTemplate tmpl = phys::VolumeTemplate::kState;
  std::vector<double> params;
  SourceSpan span;
};

struct SpawnRules {
  std::vector<SpawnRule> rules;
  double clearance = 0.02;
  double tolerance = 0.001;
};

/// Line format, `#` comments:
///   rule <predicate> <template> [params...]
///   clearance <c>
///   tolerance <tau>
/// Templates: ontop, inside, leftof/rightof/infront/behind [clearance],
/// near <dmin> <dmax>, attach, state.
ParseResult<SpawnRules> parse_rules(std::string_view text);

}  // namespace taskforge::dsl

#endif  // TASKFORGE_DSL_SIDECAR_HPP_
