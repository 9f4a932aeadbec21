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

#ifndef TASKFORGE_ERRORS_HPP_
#define TASKFORGE_ERRORS_HPP_

#include <stdexcept>

namespace taskforge {

/// Unknown ids or names, or a binding that violates the class hierarchy.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or incomplete configuration (weights, shapes, rules).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace taskforge

#endif  // TASKFORGE_ERRORS_HPP_
