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

#ifndef TASKFORGE_DATA_HASH_HPP_
#define TASKFORGE_DATA_HASH_HPP_

#include <string>
#include <string_view>

#include "taskforge/model/domain.hpp"

namespace taskforge::data {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Hash of the domain's canonical serialization, so formatting and
/// comments in the source file do not matter.
std::string domain_hash(const DomainDefinition& dom);

}  // namespace taskforge::data

#endif  // TASKFORGE_DATA_HASH_HPP_
