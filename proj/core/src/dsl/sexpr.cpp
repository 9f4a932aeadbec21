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

#include "taskforge/dsl/sexpr.hpp"

#include <cctype>

namespace taskforge::dsl {

namespace {

bool is_symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '-': case '_': case '?': case ':': case '.': case '=':
    case '+': case '*': case '/': case '<': case '>': case '!':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view SExpr::head() const {
  if (!list || items.empty() || items.front().list) return {};
  return items.front().atom;
}

ParseResult<std::vector<SExpr>> read_sexprs(std::string_view text) {
  ParseResult<std::vector<SExpr>> result;
  std::vector<SExpr> stack;
  std::vector<SExpr> top;
  int line = 1;
  int col = 1;
  std::size_t i = 0;

  auto emit = [&](SExpr e) {
    if (stack.empty()) {
      top.push_back(std::move(e));
    } else {
      stack.back().items.push_back(std::move(e));
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++col;
      ++i;
      continue;
    }
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '(') {
      SExpr e;
      e.list = true;
      e.span = {line, col};
      stack.push_back(std::move(e));
      ++col;
      ++i;
      continue;
    }
    if (c == ')') {
      if (stack.empty()) {
        result.diagnostics.push_back(
            error(DiagCode::kUnbalancedParens, {line, col}, "unmatched ')'"));
      } else {
        SExpr done = std::move(stack.back());
        stack.pop_back();
        emit(std::move(done));
      }
      ++col;
      ++i;
      continue;
    }
    if (is_symbol_char(c)) {
      SExpr e;
      e.span = {line, col};
      while (i < text.size() && is_symbol_char(text[i])) {
        e.atom.push_back(text[i]);
        ++i;
        ++col;
      }
      emit(std::move(e));
      continue;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 ||
                         static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte " + std::to_string(static_cast<unsigned char>(c))
                            : std::string("'") + c + "'";
    result.diagnostics.push_back(
        error(DiagCode::kLexical, {line, col}, "unexpected character " + shown));
    ++col;
    ++i;
  }
  while (!stack.empty()) {
    result.diagnostics.push_back(error(DiagCode::kUnbalancedParens,
                                       stack.back().span, "unclosed '('"));
    SExpr done = std::move(stack.back());
    stack.pop_back();
    emit(std::move(done));
  }
  if (!has_errors(result.diagnostics)) result.value = std::move(top);
  return result;
}

}  // namespace taskforge::dsl
