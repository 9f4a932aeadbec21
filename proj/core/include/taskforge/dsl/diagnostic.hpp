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

#ifndef TASKFORGE_DSL_DIAGNOSTIC_HPP_
#define TASKFORGE_DSL_DIAGNOSTIC_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taskforge/model/domain.hpp"

namespace taskforge::dsl {

enum class Severity { kError, kWarning };

enum class DiagCode {
  kLexical,
  kUnbalancedParens,
  kSyntax,
  kUnsupported,
  kUnknownClass,
  kUnknownPredicate,
  kUnknownAction,
  kArityMismatch,
  kDuplicateName,
  kUnboundVariable,
  kTypeMismatch,
  kCyclicType,
  kEffectConflict,
  kBadValue,
  kUnusedPredicate,
  kUnreachableAction,
  kAbstractEntityWeight,
};

std::string_view code_name(DiagCode code);

struct Diagnostic {
  Severity severity = Severity::kError;
  DiagCode code = DiagCode::kSyntax;
  std::string message;
  SourceSpan span;
};

Diagnostic error(DiagCode code, SourceSpan span, std::string message);
Diagnostic warning(DiagCode code, SourceSpan span, std::string message);

/// "file:line:col: error: message [code]"
std::string format(const Diagnostic& d, std::string_view file = {});

bool has_errors(std::span<const Diagnostic> diags);

/// A parsed value, present only when no error diagnostics were produced.
template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return value.has_value(); }
};

}  // namespace taskforge::dsl

#endif  // TASKFORGE_DSL_DIAGNOSTIC_HPP_
