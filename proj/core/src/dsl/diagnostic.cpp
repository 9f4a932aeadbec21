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

#include "taskforge/dsl/diagnostic.hpp"

#include <algorithm>

namespace taskforge::dsl {

std::string_view code_name(DiagCode code) {
  switch (code) {
    case DiagCode::kLexical: return "lexical";
    case DiagCode::kUnbalancedParens: return "unbalanced-parens";
    case DiagCode::kSyntax: return "syntax";
    case DiagCode::kUnsupported: return "unsupported";
    case DiagCode::kUnknownClass: return "unknown-class";
    case DiagCode::kUnknownPredicate: return "unknown-predicate";
    case DiagCode::kUnknownAction: return "unknown-action";
    case DiagCode::kArityMismatch: return "arity-mismatch";
    case DiagCode::kDuplicateName: return "duplicate-name";
    case DiagCode::kUnboundVariable: return "unbound-variable";
    case DiagCode::kTypeMismatch: return "type-mismatch";
    case DiagCode::kCyclicType: return "cyclic-type";
    case DiagCode::kEffectConflict: return "effect-conflict";
    case DiagCode::kBadValue: return "bad-value";
    case DiagCode::kUnusedPredicate: return "unused-predicate";
    case DiagCode::kUnreachableAction: return "unreachable-action";
    case DiagCode::kAbstractEntityWeight: return "abstract-entity-weight";
  }
  return "unknown";
}

Diagnostic error(DiagCode code, SourceSpan span, std::string message) {
  return {Severity::kError, code, std::move(message), span};
}

Diagnostic warning(DiagCode code, SourceSpan span, std::string message) {
  return {Severity::kWarning, code, std::move(message), span};
}

std::string format(const Diagnostic& d, std::string_view file) {
  std::string out;
  if (!file.empty()) {
    out += file;
    out += ':';
  }
  out += std::to_string(d.span.line) + ':' + std::to_string(d.span.column) + ": ";
  out += d.severity == Severity::kError ? "error: " : "warning: ";
  out += d.message;
  out += " [";
  out += code_name(d.code);
  out += ']';
  return out;
}

bool has_errors(std::span<const Diagnostic> diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::kError;
  });
}

}  // namespace taskforge::dsl
