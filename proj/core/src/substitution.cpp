/* Copyright 2026 The hodp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "hodp/substitution.hpp"

#include <algorithm>

#include "hodp/error.hpp"

namespace hodp {

Substitution::Substitution(std::initializer_list<std::pair<const Variable, Term>> init) {
  for (const auto& [v, t] : init) bind(v, t);
}

void Substitution::bind(const Variable& v, Term t) {
  if (t.type() && *t.type() != v.type)
    throw TypeError(v.name, "cannot bind variable of type " + v.type.to_string() + " to '" +
                                hodp::to_string(t) + "' of type " + t.type()->to_string());
  map_.insert_or_assign(v, std::move(t));
}

const Term* Substitution::find(const Variable& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

std::string Substitution::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : map_) {
    if (!first) out += ", ";
    first = false;
    out += v.name + " ↦ " + hodp::to_string(t);
  }
  return out + "}";
}

namespace {

Term subst_rec(const Term& t, const Substitution& s) {
  switch (t.kind()) {
    case TermKind::Var: {
      const Term* image = s.find(t.variable());
      return image ? *image : t;
    }
    case TermKind::Sym:
      return t;
    case TermKind::App: {
      Term f = subst_rec(t.fun(), s);
      Term a = subst_rec(t.arg(), s);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case TermKind::Lam: {
      const Variable x = t.variable();
      // Only bindings that reach a free variable of the body matter.
      Substitution inner;
      for (const auto& [v, image] : s.bindings()) {
        if (v == x) continue;
        if (occurs_free(v, t.body())) inner.bind(v, image);
      }
      if (inner.empty()) return t;
      bool captures = false;
      for (const auto& [v, image] : inner.bindings()) {
        if (occurs_free(x, image)) {
          captures = true;
          break;
        }
      }
      if (!captures) return Term::lam(x.name, x.type, subst_rec(t.body(), inner));
      std::set<std::string> avoid;
      collect_names(t.body(), avoid);
      for (const auto& [v, image] : inner.bindings()) collect_names(image, avoid);
      avoid.insert(x.name);
      Variable renamed{fresh_name(x.name, avoid), x.type};
      inner.bind(x, Term::var(renamed));
      return Term::lam(renamed.name, renamed.type, subst_rec(t.body(), inner));
    }
  }
  return t;
}

}  // namespace

Term apply_subst(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  return subst_rec(t, s);
}

bool is_beta_redex(const Term& t) { return t.is_app() && t.fun().is_lam(); }

Term beta_contract(const Term& redex) {
  const Term& lam = redex.fun();
  Substitution s;
  s.bind(lam.variable(), redex.arg());
  return apply_subst(lam.body(), s);
}

namespace {

// Enumerates redexes below `t`, returning each reduct of `t` itself.
void collect_beta(const Term& t, const Position& p, std::vector<BetaStep>& out) {
  if (is_beta_redex(t)) out.push_back({p, beta_contract(t)});
  if (t.is_app()) {
    std::vector<BetaStep> sub;
    collect_beta(t.fun(), p.child(1), sub);
    for (auto& st : sub) out.push_back({std::move(st.position), Term::app(std::move(st.result), t.arg())});
    sub.clear();
    collect_beta(t.arg(), p.child(2), sub);
    for (auto& st : sub) out.push_back({std::move(st.position), Term::app(t.fun(), std::move(st.result))});
  } else if (t.is_lam()) {
    std::vector<BetaStep> sub;
    collect_beta(t.body(), p.child(1), sub);
    for (auto& st : sub)
      out.push_back({std::move(st.position), Term::lam(t.name(), t.annotation(), std::move(st.result))});
  }
}

struct Matcher {
  std::vector<Variable> pattern_binders;
  std::vector<Variable> term_binders;
  Substitution result;

  static int index_of(const std::vector<Variable>& stack, const Term& v) {
    for (std::size_t i = stack.size(); i-- > 0;)
      if (stack[i].name == v.name() && stack[i].type == v.annotation())
        return static_cast<int>(stack.size() - 1 - i);
    return -1;
  }

  bool escapes(const Term& image) const {
    if (term_binders.empty()) return false;
    for (const Variable& v : free_vars(image))
      if (std::find(term_binders.begin(), term_binders.end(), v) != term_binders.end()) return true;
    return false;
  }

  bool run(const Term& l, const Term& t) {
    switch (l.kind()) {
      case TermKind::Var: {
        int li = index_of(pattern_binders, l);
        if (li >= 0) return t.is_var() && index_of(term_binders, t) == li;
        if (!t.type() || *t.type() != l.annotation()) return false;
        if (escapes(t)) return false;
        Variable v = l.variable();
        if (const Term* prev = result.find(v)) return alpha_eq(*prev, t);
        result.bind(v, t);
        return true;
      }
      case TermKind::Sym:
        return t.is_sym() && t.name() == l.name() && t.annotation() == l.annotation();
      case TermKind::App:
        return t.is_app() && run(l.fun(), t.fun()) && run(l.arg(), t.arg());
      case TermKind::Lam: {
        if (!t.is_lam() || t.annotation() != l.annotation()) return false;
        pattern_binders.push_back(l.variable());
        term_binders.push_back(t.variable());
        bool ok = run(l.body(), t.body());
        pattern_binders.pop_back();
        term_binders.pop_back();
        return ok;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<BetaStep> beta_steps(const Term& t) {
  std::vector<BetaStep> out;
  collect_beta(t, Position::root(), out);
  return out;
}

std::optional<Substitution> match_pattern(const Term& pattern, const Term& t) {
  Matcher m;
  if (!m.run(pattern, t)) return std::nullopt;
  return std::move(m.result);
}

}  // namespace hodp
