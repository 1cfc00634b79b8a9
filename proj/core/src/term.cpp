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

#include "hodp/term.hpp"

#include <algorithm>

#include "hodp/error.hpp"

namespace hodp {

struct Term::Node {
  TermKind kind;
  std::string name;               // Var, Sym, Lam binder
  std::optional<Type> annotation; // Var, Sym, Lam binder
  std::vector<Term> children;     // App: {fun, arg}; Lam: {body}
  std::optional<Type> type;
  std::size_t size = 1;
};

Term Term::var(std::string name, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->name = std::move(name);
  n->annotation = type;
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::sym(std::string name, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Sym;
  n->name = std::move(name);
  n->annotation = type;
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->size = 1 + fun.size() + arg.size();
  const auto& ft = fun.type();
  const auto& at = arg.type();
  if (ft && at && ft->is_arrow() && ft->domain() == *at) n->type = ft->codomain();
  n->children = {std::move(fun), std::move(arg)};
  return Term(std::move(n));
}

Term Term::lam(std::string binder, Type binder_type, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Lam;
  n->name = std::move(binder);
  n->size = 1 + body.size();
  if (body.type()) n->type = Type::arrow(binder_type, *body.type());
  n->annotation = std::move(binder_type);
  n->children = {std::move(body)};
  return Term(std::move(n));
}

Term Term::apply(Term head, std::span<const Term> args) {
  for (const Term& a : args) head = app(std::move(head), a);
  return head;
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::annotation() const { return *node_->annotation; }
const Term& Term::fun() const { return node_->children[0]; }
const Term& Term::arg() const { return node_->children[1]; }
const Term& Term::body() const { return node_->children[0]; }
const std::optional<Type>& Term::type() const { return node_->type; }
std::size_t Term::size() const { return node_->size; }

Spine spine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is_app()) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return {*cur, std::move(args)};
}

std::optional<std::string> head_symbol(const Term& t) {
  const Term* cur = &t;
  while (cur->is_app()) cur = &cur->fun();
  if (cur->is_sym()) return cur->name();
  return std::nullopt;
}

namespace {

void locate_type_error(const Term& t, const Position& p) {
  if (t.type()) return;
  if (t.is_lam()) {
    locate_type_error(t.body(), p.child(1));
    return;
  }
  // Only applications can be ill-typed at their own node.
  if (!t.fun().type()) return locate_type_error(t.fun(), p.child(1));
  if (!t.arg().type()) return locate_type_error(t.arg(), p.child(2));
  throw TypeError(p.to_string(), "cannot apply '" + to_string(t.fun()) + "' of type " +
                                     t.fun().type()->to_string() + " to '" + to_string(t.arg()) +
                                     "' of type " + t.arg().type()->to_string());
}

void free_vars_rec(const Term& t, std::vector<Variable>& bound, std::set<Variable>& out) {
  switch (t.kind()) {
    case TermKind::Var: {
      Variable v = t.variable();
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(std::move(v));
      return;
    }
    case TermKind::Sym:
      return;
    case TermKind::App:
      free_vars_rec(t.fun(), bound, out);
      free_vars_rec(t.arg(), bound, out);
      return;
    case TermKind::Lam:
      bound.push_back(t.variable());
      free_vars_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

bool occurs_free_rec(const Variable& v, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == v.name && t.annotation() == v.type;
    case TermKind::Sym:
      return false;
    case TermKind::App:
      return occurs_free_rec(v, t.fun()) || occurs_free_rec(v, t.arg());
    case TermKind::Lam:
      if (t.name() == v.name && t.annotation() == v.type) return false;
      return occurs_free_rec(v, t.body());
  }
  return false;
}

// Index from the innermost binder, or -1 when free.
int binder_index(const std::vector<Variable>& stack, const Term& var) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i].name == var.name() && stack[i].type == var.annotation())
      return static_cast<int>(stack.size() - 1 - i);
  }
  return -1;
}

bool alpha_rec(const Term& a, const Term& b, std::vector<Variable>& sa, std::vector<Variable>& sb) {
  if (a.same_node(b) && sa == sb) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      int ia = binder_index(sa, a);
      int ib = binder_index(sb, b);
      if (ia != ib) return false;
      if (ia >= 0) return true;
      return a.name() == b.name() && a.annotation() == b.annotation();
    }
    case TermKind::Sym:
      return a.name() == b.name() && a.annotation() == b.annotation();
    case TermKind::App:
      return alpha_rec(a.fun(), b.fun(), sa, sb) && alpha_rec(a.arg(), b.arg(), sa, sb);
    case TermKind::Lam: {
      if (a.annotation() != b.annotation()) return false;
      sa.push_back(a.variable());
      sb.push_back(b.variable());
      bool r = alpha_rec(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return r;
    }
  }
  return false;
}

void key_rec(const Term& t, std::vector<Variable>& stack, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var: {
      int i = binder_index(stack, t);
      if (i >= 0) {
        out += '#';
        out += std::to_string(i);
      } else {
        out += 'v';
        out += t.name();
        out += '|';
        out += t.annotation().to_string();
        out += '|';
      }
      return;
    }
    case TermKind::Sym:
      out += 'c';
      out += t.name();
      out += '|';
      return;
    case TermKind::App:
      out += '(';
      key_rec(t.fun(), stack, out);
      out += ' ';
      key_rec(t.arg(), stack, out);
      out += ')';
      return;
    case TermKind::Lam:
      out += '\\';
      out += t.annotation().to_string();
      out += '.';
      stack.push_back(t.variable());
      key_rec(t.body(), stack, out);
      stack.pop_back();
      return;
  }
}

void positions_rec(const Term& t, const Position& p, std::vector<Position>& out) {
  out.push_back(p);
  if (t.is_app()) {
    positions_rec(t.fun(), p.child(1), out);
    positions_rec(t.arg(), p.child(2), out);
  } else if (t.is_lam()) {
    positions_rec(t.body(), p.child(1), out);
  }
}

Term replace_rec(const Term& t, const Position& p, std::size_t i, const Term& u) {
  if (i == p.size()) {
    if (t.type() && u.type() && *t.type() != *u.type())
      throw TypeError(p.to_string(), "replacement of type " + u.type()->to_string() +
                                         " for a subterm of type " + t.type()->to_string());
    return u;
  }
  if (t.is_app()) {
    if (p[i] == 1) return Term::app(replace_rec(t.fun(), p, i + 1, u), t.arg());
    return Term::app(t.fun(), replace_rec(t.arg(), p, i + 1, u));
  }
  if (t.is_lam() && p[i] == 1) return Term::lam(t.name(), t.annotation(), replace_rec(t.body(), p, i + 1, u));
  throw InvalidPosition("position " + p.to_string() + " is not valid in " + to_string(t));
}

std::string atom_string(const Term& t) {
  if (t.is_var() || t.is_sym()) return t.name();
  return "(" + to_string(t) + ")";
}

}  // namespace

Type type_of(const Term& t) {
  if (!t.type()) locate_type_error(t, Position::root());
  return *t.type();
}

std::set<Variable> free_vars(const Term& t) {
  std::set<Variable> out;
  std::vector<Variable> bound;
  free_vars_rec(t, bound, out);
  return out;
}

bool occurs_free(const Variable& v, const Term& t) { return occurs_free_rec(v, t); }

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out.insert(t.name());
      return;
    case TermKind::Sym:
      return;
    case TermKind::App:
      collect_names(t.fun(), out);
      collect_names(t.arg(), out);
      return;
    case TermKind::Lam:
      out.insert(t.name());
      collect_names(t.body(), out);
      return;
  }
}

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<Variable> sa, sb;
  return alpha_rec(a, b, sa, sb);
}

std::string canonical_key(const Term& t) {
  std::string out;
  out.reserve(t.size() * 4);
  std::vector<Variable> stack;
  key_rec(t, stack, out);
  return out;
}

Term subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (cur->is_app()) {
      cur = p[i] == 1 ? &cur->fun() : &cur->arg();
    } else if (cur->is_lam() && p[i] == 1) {
      cur = &cur->body();
    } else {
      throw InvalidPosition("position " + p.to_string() + " is not valid in " + to_string(t));
    }
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& u) { return replace_rec(t, p, 0, u); }

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  positions_rec(t, Position::root(), out);
  return out;
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Sym:
      return t.name();
    case TermKind::Lam:
      return "\\" + t.name() + ". " + to_string(t.body());
    case TermKind::App: {
      Spine s = spine(t);
      std::string out = atom_string(s.head);
      for (const Term& a : s.args) out += " " + atom_string(a);
      return out;
    }
  }
  return {};
}

std::string fresh_name(std::string_view base, const std::set<std::string>& avoid) {
  std::string name(base);
  while (avoid.count(name)) name += '\'';
  return name;
}

}  // namespace hodp
