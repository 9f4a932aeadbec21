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

#ifndef TASKFORGE_DSL_PARSER_HPP_
#define TASKFORGE_DSL_PARSER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "taskforge/dsl/diagnostic.hpp"
#include "taskforge/model/domain.hpp"

namespace taskforge::dsl {

/// Parses a STRIPS domain with :typing and :negative-preconditions:
///
///   (define (domain NAME)
///     (:requirements :strips :typing :negative-preconditions)
///     (:types child ... - parent ...)
///     (:predicates (P ?a - C ...) ...)
///     (:action A :parameters (?x - C ...)
///                :precondition (and LIT ...) :effect (and LIT ...)))
///
/// where LIT is (P ?x ...) or (not (P ?x ...)). Parent types that are never
/// declared as children are implicitly placed under "object".
ParseResult<DomainDefinition> parse_domain(std::string_view text);

/// Canonical text; parse_domain(serialize_domain(d)) == d.
std::string serialize_domain(const DomainDefinition& dom);

struct SamplingWeights;

/// Semantic checks beyond the grammar: unused predicates, actions that can
/// never fire under relaxed reachability from the initial state, and (when
/// weights are given) weights that name unknown actions or classes.
std::vector<Diagnostic> validate_domain(const DomainDefinition& dom,
                                        const SamplingWeights* weights = nullptr);

}  // namespace taskforge::dsl

#endif  // TASKFORGE_DSL_PARSER_HPP_
