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

#include "manifest.hpp"

#include <fstream>

#include "taskforge/cli/commands.hpp"

namespace taskforge::cli {

std::string_view tool_version() { return TASKFORGE_VERSION; }

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

bool write_manifest(const std::string& path, const nlohmann::json& manifest) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << manifest.dump(2) << '\n';
  return static_cast<bool>(f);
}

}  // namespace taskforge::cli
