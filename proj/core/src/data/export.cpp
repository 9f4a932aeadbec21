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

#include "taskforge/data/export.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace taskforge::data {

std::size_t export_tasks(const std::vector<TaskRecord>& records, std::ostream& sink) {
  std::size_t written = 0;
  for (const auto& rec : records) {
    const std::string line = to_json_line(rec) + '\n';
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!sink) {
      throw IoError("write failed after " + std::to_string(written) + " records", written);
    }
    ++written;
  }
  sink.flush();
  if (!sink) throw IoError("flush failed", written);
  return written;
}

std::vector<TaskRecord> import_tasks(std::istream& source) {
  std::vector<TaskRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(source, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const SchemaError& e) {
      throw SchemaError("line " + std::to_string(number) + ": " + e.what());
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (source.bad()) throw IoError("read failed", out.size());
  return out;
}

}  // namespace taskforge::data
