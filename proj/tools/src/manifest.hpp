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

#ifndef TASKFORGE_TOOLS_MANIFEST_HPP_
#define TASKFORGE_TOOLS_MANIFEST_HPP_

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

namespace taskforge::cli {

/// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string manifest_path(const std::string& out);

/// Pretty-printed with sorted keys. Returns false if the file cannot be written.
bool write_manifest(const std::string& path, const nlohmann::json& manifest);

}  // namespace taskforge::cli

#endif  // TASKFORGE_TOOLS_MANIFEST_HPP_
