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

#ifndef TASKFORGE_GEN_ENUMERATE_HPP_
#define TASKFORGE_GEN_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "taskforge/model/domain.hpp"

namespace taskforge {

using BigInt = boost::multiprecision::cpp_int;

/// num_actions ^ length, exact.
BigInt count_unconstrained(std::uint64_t num_actions, std::uint64_t length);

inline constexpr double kDefaultOracleCeiling = 5.0e7;

/// The enumeration would exceed its node ceiling.
class OracleRefused : public std::runtime_error {
 public:
  OracleRefused(double estimate, double ceiling);
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

/// Upper bound on search nodes: b^length with
/// b = sum over actions of prod over params of (entities + creatable classes).
double estimate_enumeration(const DomainDefinition& dom, std::size_t length,
                            std::size_t max_entities);

/// Exhaustive depth-first enumeration of every valid grounded sequence of
/// the given length from make_initial_state(dom).
///
/// Each parameter ranges over the existing compatible entities plus one
/// fresh entity per compatible concrete class (while fewer than
/// max_entities were created). Fresh entities take the next id, so tasks
/// are counted once up to class-preserving renaming. Bindings are
/// injective. `visit` may be empty for counting only. Throws OracleRefused
/// when estimate_enumeration exceeds `ceiling`.
std::uint64_t enumerate_valid_sequences(
    const DomainDefinition& dom, std::size_t length, std::size_t max_entities,
    const std::function<void(const TaskSpec&)>& visit = {},
    double ceiling = kDefaultOracleCeiling);

}  // namespace taskforge

#endif  // TASKFORGE_GEN_ENUMERATE_HPP_
