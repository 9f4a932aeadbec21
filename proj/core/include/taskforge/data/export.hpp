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

#ifndef TASKFORGE_DATA_EXPORT_HPP_
#define TASKFORGE_DATA_EXPORT_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "taskforge/data/record.hpp"

namespace taskforge::data {

/// Sink failure; `written` records were fully written before it.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::size_t written)
      : std::runtime_error(what), written_(written) {}
  std::size_t written() const { return written_; }

 private:
  std::size_t written_;
};

/// One JSON record per line, each terminated by '\n'. Returns the number
/// of records written.
std::size_t export_tasks(const std::vector<TaskRecord>& records, std::ostream& sink);

/// Reads records in file order. Blank lines are skipped. Errors carry the
/// 1-based line number.
std::vector<TaskRecord> import_tasks(std::istream& source);

}  // namespace taskforge::data

#endif  // TASKFORGE_DATA_EXPORT_HPP_
