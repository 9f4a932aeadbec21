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

#include "taskforge/dsl/parser.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "taskforge/dsl/sexpr.hpp"

namespace taskforge::dsl {

namespace {

constexpr std::string_view kSupportedRequirements[] = {
    ":strips", ":typing", ":negative-preconditions"};

struct TypedName {
  std::string name;
  std::string type;  // empty means untyped
  SourceSpan span;
  SourceSpan type_span;
};

class DomainParser {
 public:
  explicit DomainParser(std::vector<Diagnostic>& diags) : diags_(diags) {}

  std::optional<DomainDefinition> parse(const std::vector<SExpr>& forms) {
    if (forms.size() != 1) {
      SourceSpan at = forms.empty() ? SourceSpan{1, 1} : forms[1 % forms.size()].span;
      fail(DiagCode::kSyntax, at, "expected exactly one (define ...) form");
      return std::nullopt;
    }
    const SExpr& def = forms.front();
    if (!def.is_list() || def.head() != "define") {
      fail(DiagCode::kSyntax, def.span, "expected (define (domain NAME) ...)");
      return std::nullopt;
    }
    if (def.items.size() < 2 || !def.items[1].is_list() ||
        def.items[1].items.size() != 2 || def.items[1].head() != "domain" ||
        !def.items[1].items[1].is_atom()) {
      fail(DiagCode::kSyntax, def.items.size() > 1 ? def.items[1].span : def.span,
           "expected (domain NAME) after define");
      return std::nullopt;
    }
    dom_.name = def.items[1].items[1].atom;

    bool seen_types = false;
    bool seen_predicates = false;
    bool seen_requirements = false;
    std::vector<const SExpr*> action_forms;
    for (std::size_t i = 2; i < def.items.size(); ++i) {
      const SExpr& sec = def.items[i];
      const auto head = sec.head();
      if (head == ":requirements") {
        if (once(seen_requirements, sec)) parse_requirements(sec);
      } else if (head == ":types") {
        if (seen_predicates || !action_forms.empty()) {
          fail(DiagCode::kSyntax, sec.span, ":types must precede :predicates and actions");
        }
        if (once(seen_types, sec)) parse_types(sec);
      } else if (head == ":predicates") {
        if (!action_forms.empty()) {
          fail(DiagCode::kSyntax, sec.span, ":predicates must precede actions");
        }
        if (once(seen_predicates, sec)) parse_predicates(sec);
      } else if (head == ":action") {
        action_forms.push_back(&sec);
      } else if (head == ":constants" || head == ":functions" ||
                 head == ":derived" || head == ":durative-action" ||
                 head == ":constraints") {
        fail(DiagCode::kUnsupported, sec.span,
             "section " + std::string(head) + " is not supported");
      } else {
        fail(DiagCode::kSyntax, sec.span, "unexpected domain section");
      }
    }
    for (const SExpr* a : action_forms) parse_action(*a);
    if (has_errors(diags_)) return std::nullopt;
    return std::move(dom_);
  }

 private:
  void fail(DiagCode code, SourceSpan span, std::string msg) {
    diags_.push_back(error(code, span, std::move(msg)));
  }

  bool once(bool& seen, const SExpr& sec) {
    if (seen) {
      fail(DiagCode::kDuplicateName, sec.span,
           "duplicate section " + std::string(sec.head()));
      return false;
    }
    seen = true;
    return true;
  }

  void parse_requirements(const SExpr& sec) {
    for (std::size_t i = 1; i < sec.items.size(); ++i) {
      const auto& r = sec.items[i];
      if (!r.is_atom()) {
        fail(DiagCode::kSyntax, r.span, "expected requirement keyword");
        continue;
      }
      if (std::find(std::begin(kSupportedRequirements),
                    std::end(kSupportedRequirements),
                    r.atom) == std::end(kSupportedRequirements)) {
        fail(DiagCode::kUnsupported, r.span, "unsupported requirement " + r.atom);
      }
    }
  }

  // Parses "a b - T c ?d - U" style lists. Names after the last type marker
  // are untyped.
  std::optional<std::vector<TypedName>> typed_list(const SExpr& list,
                                                   std::size_t start,
                                                   bool variables) {
    std::vector<TypedName> out;
    std::size_t pending = 0;
    bool ok = true;
    for (std::size_t i = start; i < list.items.size(); ++i) {
      const SExpr& tok = list.items[i];
      if (tok.is_list()) {
        fail(tok.head() == "either" ? DiagCode::kUnsupported : DiagCode::kSyntax,
             tok.span,
             tok.head() == "either" ? "(either ...) types are not supported"
                                     : "unexpected list in typed name list");
        ok = false;
        continue;
      }
      if (tok.atom == "-") {
        if (i + 1 >= list.items.size()) {
          fail(DiagCode::kSyntax, tok.span, "missing type after '-'");
          return std::nullopt;
        }
        const SExpr& type = list.items[i + 1];
        if (type.is_list()) {
          fail(type.head() == "either" ? DiagCode::kUnsupported : DiagCode::kSyntax,
               type.span, "expected a type name after '-'");
          return std::nullopt;
        }
        if (pending == 0) {
          fail(DiagCode::kSyntax, tok.span, "type given without names");
        }
        for (std::size_t k = out.size() - pending; k < out.size(); ++k) {
          out[k].type = type.atom;
          out[k].type_span = type.span;
        }
        pending = 0;
        ++i;
        continue;
      }
      const bool is_var = tok.atom.size() > 1 && tok.atom.front() == '?';
      if (variables && !is_var) {
        fail(DiagCode::kSyntax, tok.span, "expected a ?variable, got '" + tok.atom + "'");
        ok = false;
        continue;
      }
      if (!variables && (tok.atom.front() == '?' || tok.atom.front() == ':')) {
        fail(DiagCode::kSyntax, tok.span, "expected a type name, got '" + tok.atom + "'");
        ok = false;
        continue;
      }
      out.push_back({tok.atom, {}, tok.span, {}});
      ++pending;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  void parse_types(const SExpr& sec) {
    auto names = typed_list(sec, 1, false);
    if (!names) return;
    std::map<std::string, std::size_t> first;
    std::vector<TypedName> decls;
    for (auto& t : *names) {
      if (t.name == kRootClassName) {
        fail(DiagCode::kDuplicateName, t.span, "'object' is the built-in root type");
        continue;
      }
      if (t.type.empty()) t.type = std::string(kRootClassName);
      if (first.count(t.name)) {
        fail(DiagCode::kDuplicateName, t.span, "duplicate type '" + t.name + "'");
        continue;
      }
      first.emplace(t.name, decls.size());
      decls.push_back(t);
    }
    // Parents never declared as children become children of the root.
    for (const auto& t : decls) {
      if (t.type != kRootClassName && !first.count(t.type) &&
          !dom_.hierarchy.find(t.type)) {
        dom_.hierarchy.add(t.type);
      }
    }
    std::vector<bool> placed(decls.size(), false);
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < decls.size(); ++i) {
        if (placed[i]) continue;
        if (auto parent = dom_.hierarchy.find(decls[i].type)) {
          dom_.hierarchy.add(decls[i].name, *parent);
          placed[i] = true;
          progress = true;
        }
      }
    }
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (!placed[i]) {
        fail(DiagCode::kCyclicType, decls[i].span,
             "type '" + decls[i].name + "' is part of an inheritance cycle");
      }
    }
  }

  std::optional<ClassId> resolve_class(const TypedName& t) {
    if (t.type.empty()) return ClassHierarchy::kRoot;
    if (auto c = dom_.hierarchy.find(t.type)) return c;
    fail(DiagCode::kUnknownClass, t.type_span, "unknown type '" + t.type + "'");
    return std::nullopt;
  }

  void parse_predicates(const SExpr& sec) {
    for (std::size_t i = 1; i < sec.items.size(); ++i) {
      const SExpr& p = sec.items[i];
      if (!p.is_list() || p.head().empty()) {
        fail(DiagCode::kSyntax, p.span, "expected (NAME ?arg - Type ...)");
        continue;
      }
      const std::string name(p.head());
      if (name == "not" || name == "and" || name == "=") {
        fail(DiagCode::kSyntax, p.span, "'" + name + "' is reserved");
        continue;
      }
      auto args = typed_list(p, 1, true);
      if (!args) continue;
      PredicateSchema schema{name, {}, PredicateKind::kUnaryState};
      bool ok = true;
      for (const auto& a : *args) {
        auto c = resolve_class(a);
        if (!c) {
          ok = false;
          continue;
        }
        schema.params.push_back(*c);
      }
      if (!ok) continue;
      if (dom_.find_predicate(name)) {
        fail(DiagCode::kDuplicateName, p.span, "duplicate predicate '" + name + "'");
        continue;
      }
      schema.kind = schema.arity() >= 2 ? PredicateKind::kBinding
                                        : PredicateKind::kUnaryState;
      dom_.predicates.push_back(std::move(schema));
      dom_.predicate_spans.push_back(p.items.front().span);
    }
  }

  std::optional<LiteralTemplate> literal(const SExpr& e, const ActionSchema& act) {
    bool positive = true;
    const SExpr* atom = &e;
    if (e.head() == "not") {
      if (e.items.size() != 2 || !e.items[1].is_list()) {
        fail(DiagCode::kSyntax, e.span, "expected (not (PREDICATE ...))");
        return std::nullopt;
      }
      positive = false;
      atom = &e.items[1];
    }
    if (!atom->is_list() || atom->head().empty()) {
      fail(DiagCode::kSyntax, atom->span, "expected a literal (PREDICATE ?x ...)");
      return std::nullopt;
    }
    const std::string pname(atom->head());
    if (pname == "and" || pname == "not" || pname == "or" || pname == "forall" ||
        pname == "exists" || pname == "when" || pname == "imply" || pname == "=") {
      fail(DiagCode::kUnsupported, atom->span,
           "'" + pname + "' is not allowed here (STRIPS literals only)");
      return std::nullopt;
    }
    auto pid = dom_.find_predicate(pname);
    if (!pid) {
      fail(DiagCode::kUnknownPredicate, atom->items.front().span,
           "undeclared predicate '" + pname + "'");
      return std::nullopt;
    }
    const auto& schema = dom_.predicates[*pid];
    const std::size_t given = atom->items.size() - 1;
    if (given != schema.arity()) {
      fail(DiagCode::kArityMismatch, atom->span,
           "predicate '" + pname + "' takes " + std::to_string(schema.arity()) +
               " arguments, " + std::to_string(given) + " given");
      return std::nullopt;
    }
    LiteralTemplate lit{{*pid, {}}, positive};
    bool ok = true;
    for (std::size_t i = 1; i < atom->items.size(); ++i) {
      const SExpr& arg = atom->items[i];
      if (arg.is_list()) {
        fail(DiagCode::kSyntax, arg.span, "expected a ?variable");
        ok = false;
        continue;
      }
      if (arg.atom.front() != '?') {
        fail(DiagCode::kUnsupported, arg.span,
             "constant '" + arg.atom + "' is not supported; use a parameter");
        ok = false;
        continue;
      }
      auto it = std::find_if(act.params.begin(), act.params.end(),
                             [&](const Parameter& p) { return p.name == arg.atom; });
      if (it == act.params.end()) {
        fail(DiagCode::kUnboundVariable, arg.span,
             "variable " + arg.atom + " is not a parameter of " + act.name);
        ok = false;
        continue;
      }
      const auto idx = static_cast<std::size_t>(it - act.params.begin());
      const ClassId want = schema.params[i - 1];
      if (!dom_.hierarchy.is_subclass(it->cls, want)) {
        fail(DiagCode::kTypeMismatch, arg.span,
             "parameter " + arg.atom + " - " + dom_.hierarchy.name(it->cls) +
                 " is not a " + dom_.hierarchy.name(want) + " as " + pname +
                 " requires");
        ok = false;
        continue;
      }
      lit.atom.args.push_back(idx);
    }
    if (!ok) return std::nullopt;
    return lit;
  }

  std::vector<const SExpr*> conjuncts(const SExpr& e) {
    std::vector<const SExpr*> out;
    if (e.is_atom()) {
      fail(DiagCode::kSyntax, e.span, "expected a literal or (and ...)");
      return out;
    }
    if (e.items.empty()) return out;
    if (e.head() == "and") {
      for (std::size_t i = 1; i < e.items.size(); ++i) out.push_back(&e.items[i]);
    } else {
      out.push_back(&e);
    }
    return out;
  }

  void parse_action(const SExpr& form) {
    if (form.items.size() < 2 || !form.items[1].is_atom() ||
        form.items[1].atom.front() == ':') {
      fail(DiagCode::kSyntax, form.span, "expected (:action NAME ...)");
      return;
    }
    ActionSchema act;
    act.name = form.items[1].atom;
    const SExpr* params = nullptr;
    const SExpr* pre = nullptr;
    const SExpr* eff = nullptr;
    bool ok = true;
    for (std::size_t i = 2; i < form.items.size(); i += 2) {
      const SExpr& key = form.items[i];
      if (!key.is_atom() || i + 1 >= form.items.size()) {
        fail(DiagCode::kSyntax, key.span, "expected :keyword VALUE pairs in action");
        return;
      }
      const SExpr* value = &form.items[i + 1];
      const SExpr** slot = nullptr;
      if (key.atom == ":parameters") slot = &params;
      else if (key.atom == ":precondition") slot = &pre;
      else if (key.atom == ":effect") slot = &eff;
      if (!slot) {
        fail(DiagCode::kSyntax, key.span, "unknown action key " + key.atom);
        ok = false;
        continue;
      }
      if (*slot) {
        fail(DiagCode::kDuplicateName, key.span, "duplicate " + key.atom);
        ok = false;
        continue;
      }
      *slot = value;
    }
    if (params) {
      if (!params->is_list()) {
        fail(DiagCode::kSyntax, params->span, "expected a parameter list");
        return;
      }
      auto vars = typed_list(*params, 0, true);
      if (!vars) return;
      for (const auto& v : *vars) {
        auto c = resolve_class(v);
        if (!c) {
          ok = false;
          continue;
        }
        auto dup = std::find_if(act.params.begin(), act.params.end(),
                                [&](const Parameter& p) { return p.name == v.name; });
        if (dup != act.params.end()) {
          fail(DiagCode::kDuplicateName, v.span, "duplicate parameter " + v.name);
          ok = false;
          continue;
        }
        act.params.push_back({v.name, *c});
      }
    }
    if (!ok) return;
    if (pre) {
      for (const SExpr* c : conjuncts(*pre)) {
        if (auto lit = literal(*c, act)) act.preconditions.push_back(std::move(*lit));
        else ok = false;
      }
    }
    std::vector<SourceSpan> add_spans;
    if (eff) {
      for (const SExpr* c : conjuncts(*eff)) {
        auto lit = literal(*c, act);
        if (!lit) {
          ok = false;
          continue;
        }
        if (lit->positive) {
          act.add_effects.push_back(std::move(lit->atom));
          add_spans.push_back(c->span);
        } else {
          act.del_effects.push_back(std::move(lit->atom));
        }
      }
    }
    for (std::size_t i = 0; i < act.add_effects.size(); ++i) {
      if (std::find(act.del_effects.begin(), act.del_effects.end(),
                    act.add_effects[i]) != act.del_effects.end()) {
        fail(DiagCode::kEffectConflict, add_spans[i],
             "effect of " + act.name + " both adds and deletes " +
                 dom_.predicates[act.add_effects[i].predicate].name);
        ok = false;
      }
    }
    if (dom_.find_action(act.name)) {
      fail(DiagCode::kDuplicateName, form.items[1].span,
           "duplicate action '" + act.name + "'");
      return;
    }
    if (!ok) return;
    dom_.actions.push_back(std::move(act));
    dom_.action_spans.push_back(form.items[1].span);
  }

  std::vector<Diagnostic>& diags_;
  DomainDefinition dom_;
};

}  // namespace

ParseResult<DomainDefinition> parse_domain(std::string_view text) {
  ParseResult<DomainDefinition> result;
  auto forms = read_sexprs(text);
  result.diagnostics = std::move(forms.diagnostics);
  if (!forms.ok()) return result;
  DomainParser parser(result.diagnostics);
  result.value = parser.parse(*forms.value);
  if (has_errors(result.diagnostics)) result.value.reset();
  return result;
}

}  // namespace taskforge::dsl
