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

#ifndef TASKFORGE_DATA_RECORD_HPP_
#define TASKFORGE_DATA_RECORD_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "taskforge/model/domain.hpp"
#include "taskforge/phys/validator.hpp"

namespace taskforge::data {

inline constexpr int kSchemaVersion = 1;

/// Malformed record text or a record that does not fit its domain.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Record written by a different schema version.
class SchemaError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Predicate or action name followed by argument entity names.
using Atom = std::vector<std::string>;

struct EntityRecord {
  std::string name;
  std::string cls;
  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

using Point = std::array<double, 3>;

/// Declarative reward spec for one subgoal; see reward.hpp for evaluation.
struct RewardScaffold {
  std::string manipulated;
  Point goal_center{};
  double normalizer = 1.0;  // workspace diagonal
  double sparse_bonus = 1.0;
  double lambda = 0.0;      // 0 pure dense, 1 pure sparse
  friend bool operator==(const RewardScaffold&, const RewardScaffold&) = default;
};

struct SubgoalRecord {
  std::vector<Atom> initial;  // facts before the step
  std::vector<Atom> goal;     // facts the step adds
  std::vector<Atom> removed;  // facts the step deletes
  std::optional<RewardScaffold> reward;
  friend bool operator==(const SubgoalRecord&, const SubgoalRecord&) = default;
};

struct VerdictRecord {
  bool feasible = false;
  int attempts = 0;
  std::string failure = "none";
  std::string detail;
  std::map<std::string, Point> poses;  // by entity name, when feasible
  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

struct GenerationMeta {
  std::uint64_t task_index = 0;
  std::uint64_t max_entities = 0;
  std::uint64_t resample_budget = 0;
  std::uint64_t backtrack_budget = 0;
  int max_attempts = 0;
  std::string tool_version;
  friend bool operator==(const GenerationMeta&, const GenerationMeta&) = default;
};

struct TaskRecord {
  int schema_version = kSchemaVersion;
  std::string id;
  std::string domain_name;
  std::string domain_hash;
  std::uint64_t seed = 0;
  std::vector<EntityRecord> entities;  // every entity of the task, id order
  std::vector<Atom> actions;
  std::vector<SubgoalRecord> subgoals;  // one per action
  std::vector<Atom> final_facts;
  bool viable = false;
  std::vector<VerdictRecord> viability;  // one per state, initial first
  bool reward_incomplete = false;        // some subgoal has no scaffold
  GenerationMeta meta;

  friend bool operator==(const TaskRecord&, const TaskRecord&) = default;
};

/// Hash of (domain hash, seed, grounded actions).
std::string task_id(std::string_view domain_hash, std::uint64_t seed,
                    const std::vector<Atom>& actions);

Atom to_atom(const DomainDefinition& dom, const WorldState& state, const GroundPredicate& fact);
Atom to_atom(const DomainDefinition& dom, const WorldState& state, const GroundAction& action);

/// Assembles the record for a task and its viability report.
TaskRecord build_record(const DomainDefinition& dom, std::string_view domain_hash,
                        const TaskSpec& task, const phys::ViabilityReport& report,
                        const phys::PhysicsSetup& setup, const GenerationMeta& meta,
                        double lambda = 0.0);

/// Rebuilds the task: entities, initial state and the action sequence,
/// with states recomputed by applying the actions. Throws FormatError if
/// names do not resolve against `dom` or a precondition fails.
TaskSpec task_from_record(const DomainDefinition& dom, const TaskRecord& rec);

/// Compact single-line JSON with sorted keys.
std::string to_json_line(const TaskRecord& rec);
/// Throws FormatError, or SchemaError for a different schema version.
TaskRecord parse_record(std::string_view line);

}  // namespace taskforge::data

#endif  // TASKFORGE_DATA_RECORD_HPP_
