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

#ifndef TASKFORGE_DSL_SEXPR_HPP_
#define TASKFORGE_DSL_SEXPR_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "taskforge/dsl/diagnostic.hpp"

namespace taskforge::dsl {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  SourceSpan span;
  bool list = false;

  bool is_atom() const { return !list; }
  bool is_list() const { return list; }
  bool is_atom(std::string_view s) const { return !list && atom == s; }
  /// First element's atom text, or empty when not a list headed by an atom.
  std::string_view head() const;
};

/// Reads every top-level s-expression. `;` starts a comment to end of line.
ParseResult<std::vector<SExpr>> read_sexprs(std::string_view text);

}  // namespace taskforge::dsl

#endif  // TASKFORGE_DSL_SEXPR_HPP_
