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

#ifndef TASKFORGE_DATA_SIMILARITY_HPP_
#define TASKFORGE_DATA_SIMILARITY_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "taskforge/data/record.hpp"

namespace taskforge::data {

class DomainMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Levenshtein distance over whole tokens.
std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Goal facts with entities replaced by their classes, e.g. "OnTop(Apple,Table)".
std::set<std::string> goal_signatures(const TaskRecord& rec);

/// seq_weight * (1 - edit / max_len) + (1 - seq_weight) * jaccard(goals).
/// Two empty action lists, or two empty goal sets, count as identical. Throws DomainMismatch when the domain
/// hashes differ.
double similarity(const TaskRecord& a, const TaskRecord& b, double seq_weight = 0.5);

/// Full symmetric matrix, row-major; rows are computed in parallel.
std::vector<double> similarity_matrix(const std::vector<TaskRecord>& records,
                                      unsigned workers = 1, double seq_weight = 0.5);

}  // namespace taskforge::data

#endif  // TASKFORGE_DATA_SIMILARITY_HPP_
