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

#include "taskforge/dsl/sidecar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace taskforge::dsl {

namespace {

struct Token {
  std::string_view text;
  SourceSpan span;
};

/// Splits into whitespace-separated tokens per line; `#` starts a comment.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) {
        toks.push_back({line.substr(start, i - start),
                        {line_no, static_cast<int>(start) + 1}});
      }
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::optional<double> number(const Token& t, std::vector<Diagnostic>& diags) {
  double v = 0.0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || !std::isfinite(v)) {
    diags.push_back(error(DiagCode::kBadValue, t.span,
                          "expected a number, got '" + std::string(t.text) + "'"));
    return std::nullopt;
  }
  return v;
}

bool arity(const std::vector<Token>& line, std::size_t lo, std::size_t hi,
           std::vector<Diagnostic>& diags) {
  if (line.size() < lo || line.size() > hi) {
    diags.push_back(error(DiagCode::kSyntax, line.front().span,
                          "wrong number of fields for '" +
                              std::string(line.front().text) + "'"));
    return false;
  }
  return true;
}

std::optional<double> nonnegative(const Token& t, std::vector<Diagnostic>& diags) {
  auto v = number(t, diags);
  if (v && *v < 0) {
    diags.push_back(error(DiagCode::kBadValue, t.span, "weight must be nonnegative"));
    return std::nullopt;
  }
  return v;
}

std::optional<double> positive(const Token& t, std::vector<Diagnostic>& diags) {
  auto v = number(t, diags);
  if (v && *v <= 0) {
    diags.push_back(error(DiagCode::kBadValue, t.span, "dimension must be positive"));
    return std::nullopt;
  }
  return v;
}

void duplicate(std::string_view what, const Token& at, std::vector<Diagnostic>& diags) {
  diags.push_back(error(DiagCode::kDuplicateName, at.span,
                        "duplicate entry for " + std::string(what)));
}

}  // namespace

double SamplingWeights::action_weight(std::string_view name) const {
  auto it = action.find(name);
  return it == action.end() ? 1.0 : it->second;
}

double SamplingWeights::pair_weight(std::string_view prev, std::string_view next) const {
  auto it = pair.find({std::string(prev), std::string(next)});
  return it == pair.end() ? 1.0 : it->second;
}

double SamplingWeights::entity_weight(std::string_view cls) const {
  auto it = entity.find(cls);
  return it == entity.end() ? 1.0 : it->second;
}

ParseResult<SamplingWeights> parse_weights(std::string_view text) {
  ParseResult<SamplingWeights> result;
  auto& diags = result.diagnostics;
  SamplingWeights w;
  bool seen_reuse = false;
  for (const auto& line : tokenize_lines(text)) {
    const auto key = line.front().text;
    if (key == "action" || key == "entity") {
      if (!arity(line, 3, 3, diags)) continue;
      auto v = nonnegative(line[2], diags);
      if (!v) continue;
      const std::string name(line[1].text);
      auto& map = key == "action" ? w.action : w.entity;
      const std::string span_key = std::string(key) + " " + name;
      if (!map.emplace(name, *v).second) {
        duplicate(span_key, line[1], diags);
        continue;
      }
      w.spans.emplace(span_key, line[1].span);
    } else if (key == "pair") {
      if (!arity(line, 4, 4, diags)) continue;
      auto v = nonnegative(line[3], diags);
      if (!v) continue;
      std::pair<std::string, std::string> k{std::string(line[1].text),
                                            std::string(line[2].text)};
      const std::string span_key = "pair " + k.first + " " + k.second;
      if (!w.pair.emplace(k, *v).second) {
        duplicate(span_key, line[1], diags);
        continue;
      }
      w.spans.emplace(span_key, line[1].span);
    } else if (key == "reuse_prob") {
      if (!arity(line, 2, 2, diags)) continue;
      auto v = number(line[1], diags);
      if (!v) continue;
      if (*v < 0.0 || *v > 1.0) {
        diags.push_back(error(DiagCode::kBadValue, line[1].span,
                              "reuse_prob must lie in [0, 1]"));
        continue;
      }
      if (seen_reuse) {
        duplicate("reuse_prob", line[0], diags);
        continue;
      }
      seen_reuse = true;
      w.reuse_prob = *v;
    } else {
      diags.push_back(error(DiagCode::kSyntax, line.front().span,
                            "unknown weights directive '" + std::string(key) + "'"));
    }
  }
  if (!has_errors(diags)) result.value = std::move(w);
  return result;
}

ParseResult<ShapesConfig> parse_shapes(std::string_view text) {
  ParseResult<ShapesConfig> result;
  auto& diags = result.diagnostics;
  ShapesConfig cfg;
  for (const auto& line : tokenize_lines(text)) {
    const auto key = line.front().text;
    if (key == "shape") {
      if (line.size() < 3) {
        arity(line, 4, 6, diags);
        continue;
      }
      const std::string cls(line[1].text);
      phys::Shape shape;
      if (line[2].text == "box") {
        if (!arity(line, 6, 6, diags)) continue;
        auto dx = positive(line[3], diags);
        auto dy = positive(line[4], diags);
        auto dz = positive(line[5], diags);
        if (!dx || !dy || !dz) continue;
        shape = phys::Shape::box(*dx, *dy, *dz);
      } else if (line[2].text == "sphere") {
        if (!arity(line, 4, 4, diags)) continue;
        auto r = positive(line[3], diags);
        if (!r) continue;
        shape = phys::Shape::sphere(*r);
      } else {
        diags.push_back(error(DiagCode::kSyntax, line[2].span,
                              "shape kind must be 'box' or 'sphere'"));
        continue;
      }
      if (cfg.spans.count(cls)) {
        duplicate("shape " + cls, line[1], diags);
        continue;
      }
      cfg.spans.emplace(cls, line[1].span);
      cfg.shapes.emplace_back(cls, shape);
    } else if (key == "fixed") {
      if (!arity(line, 5, 5, diags)) continue;
      auto x = number(line[2], diags);
      auto y = number(line[3], diags);
      auto z = number(line[4], diags);
      if (!x || !y || !z) continue;
      if (!cfg.fixed.emplace(std::string(line[1].text), phys::Vec3{*x, *y, *z}).second) {
        duplicate("fixed " + std::string(line[1].text), line[1], diags);
      }
    } else if (key == "robot") {
      if (line.size() != 5 && line.size() != 8) {
        diags.push_back(error(DiagCode::kSyntax, line.front().span,
                              "robot expects <bx> <by> <bz> <reach> [<ox> <oy> <oz>]"));
        continue;
      }
      std::vector<double> v;
      for (std::size_t i = 1; i < line.size(); ++i) {
        if (auto n = number(line[i], diags)) v.push_back(*n);
      }
      if (v.size() != line.size() - 1) continue;
      if (v[3] <= 0) {
        diags.push_back(error(DiagCode::kBadValue, line[4].span, "reach must be positive"));
        continue;
      }
      if (cfg.robot) {
        duplicate("robot", line[0], diags);
        continue;
      }
      phys::RobotModel robot;
      robot.base = {v[0], v[1], v[2]};
      robot.reach = v[3];
      if (v.size() == 7) robot.attach_offset = {v[4], v[5], v[6]};
      cfg.robot = robot;
    } else if (key == "workspace") {
      if (!arity(line, 7, 7, diags)) continue;
      std::vector<double> v;
      for (std::size_t i = 1; i < line.size(); ++i) {
        if (auto n = number(line[i], diags)) v.push_back(*n);
      }
      if (v.size() != 6) continue;
      phys::Aabb ws({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
      if (ws.is_empty()) {
        diags.push_back(error(DiagCode::kBadValue, line[1].span,
                              "workspace min corner must not exceed max corner"));
        continue;
      }
      if (cfg.workspace) {
        duplicate("workspace", line[0], diags);
        continue;
      }
      cfg.workspace = ws;
    } else {
      diags.push_back(error(DiagCode::kSyntax, line.front().span,
                            "unknown shapes directive '" + std::string(key) + "'"));
    }
  }
  if (!has_errors(diags)) result.value = std::move(cfg);
  return result;
}

ParseResult<SpawnRules> parse_rules(std::string_view text) {
  ParseResult<SpawnRules> result;
  auto& diags = result.diagnostics;
  SpawnRules rules;
  std::map<std::string, bool, std::less<>> seen;
  for (const auto& line : tokenize_lines(text)) {
    const auto key = line.front().text;
    if (key == "clearance" || key == "tolerance") {
      if (!arity(line, 2, 2, diags)) continue;
      auto v = nonnegative(line[1], diags);
      if (!v) continue;
      (key == "clearance" ? rules.clearance : rules.tolerance) = *v;
      continue;
    }
    if (key != "rule") {
      diags.push_back(error(DiagCode::kSyntax, line.front().span,
                            "unknown rules directive '" + std::string(key) + "'"));
      continue;
    }
    if (line.size() < 3) {
      arity(line, 3, 5, diags);
      continue;
    }
    SpawnRule rule;
    rule.predicate = std::string(line[1].text);
    rule.span = line[1].span;
    if (!phys::parse_template(line[2].text, rule.tmpl)) {
      diags.push_back(error(DiagCode::kSyntax, line[2].span,
                            "unknown volume template '" + std::string(line[2].text) + "'"));
      continue;
    }
    bool ok = true;
    for (std::size_t i = 3; i < line.size(); ++i) {
      if (auto v = nonnegative(line[i], diags)) rule.params.push_back(*v);
      else ok = false;
    }
    if (!ok) continue;
    std::size_t max_params = 0;
    std::size_t min_params = 0;
    switch (rule.tmpl) {
      case phys::VolumeTemplate::kLeftOf:
      case phys::VolumeTemplate::kRightOf:
      case phys::VolumeTemplate::kInFront:
      case phys::VolumeTemplate::kBehind:
        max_params = 1;
        break;
      case phys::VolumeTemplate::kNear:
        min_params = max_params = 2;
        break;
      default:
        break;
    }
    if (rule.params.size() < min_params || rule.params.size() > max_params) {
      diags.push_back(error(DiagCode::kSyntax, line[2].span,
                            "wrong number of parameters for template '" +
                                std::string(line[2].text) + "'"));
      continue;
    }
    if (rule.tmpl == phys::VolumeTemplate::kNear && rule.params[0] > rule.params[1]) {
      diags.push_back(error(DiagCode::kBadValue, line[3].span,
                            "near band requires dmin <= dmax"));
      continue;
    }
    if (seen.count(rule.predicate)) {
      duplicate("rule " + rule.predicate, line[1], diags);
      continue;
    }
    seen.emplace(rule.predicate, true);
    rules.rules.push_back(std::move(rule));
  }
  if (!has_errors(diags)) result.value = std::move(rules);
  return result;
}

}  // namespace taskforge::dsl
