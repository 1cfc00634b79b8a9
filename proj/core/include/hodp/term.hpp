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

#ifndef HODP_TERM_HPP
#define HODP_TERM_HPP

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hodp/position.hpp"
#include "hodp/type.hpp"

namespace hodp {

// Variables are identified by name and type together.
struct Variable {
  std::string name;
  Type type;

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.name == b.name && a.type == b.type;
  }
  friend bool operator<(const Variable& a, const Variable& b) {
    if (a.name != b.name) return a.name < b.name;
    return compare(a.type, b.type) < 0;
  }
};

enum class TermKind { Var, Sym, App, Lam };

// An immutable λ-term over a signature: variable, symbol, application or
// abstraction. Nodes are shared, so copying a Term is cheap.
//
// Construction never fails; a node whose children do not fit is marked
// ill-typed (type() is empty) and type_of() reports where.
class Term {
 public:
  static Term var(std::string name, Type type);
  static Term var(const Variable& v) { return var(v.name, v.type); }
  static Term sym(std::string name, Type type);
  static Term app(Term fun, Term arg);
  static Term lam(std::string binder, Type binder_type, Term body);
  static Term lam(const Variable& v, Term body) { return lam(v.name, v.type, std::move(body)); }
  // head a1 ... an
  static Term apply(Term head, std::span<const Term> args);

  TermKind kind() const;
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_sym() const { return kind() == TermKind::Sym; }
  bool is_app() const { return kind() == TermKind::App; }
  bool is_lam() const { return kind() == TermKind::Lam; }

  // Var/Sym: the name; Lam: the binder name.
  const std::string& name() const;
  // Var/Sym: the declared type; Lam: the binder type.
  const Type& annotation() const;
  // Var: itself; Lam: the bound variable.
  Variable variable() const { return {name(), annotation()}; }

  const Term& fun() const;
  const Term& arg() const;
  const Term& body() const;

  // Empty iff some node is ill-typed.
  const std::optional<Type>& type() const;
  std::size_t size() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Left-nested application spine: head a1 ... an with head not an App.
struct Spine {
  Term head;
  std::vector<Term> args;
};

Spine spine(const Term& t);
// Name of the spine head when it is a symbol.
std::optional<std::string> head_symbol(const Term& t);

// The unique simple type of `t`. Throws TypeError naming the position of
// the first ill-typed node (preorder).
Type type_of(const Term& t);

std::set<Variable> free_vars(const Term& t);
bool occurs_free(const Variable& v, const Term& t);
// Every name used in `t`, free or bound; fresh-name generation avoids them.
void collect_names(const Term& t, std::set<std::string>& out);

// Equality up to renaming of bound variables.
bool alpha_eq(const Term& a, const Term& b);
// A string that is equal for two terms iff they are α-equivalent: bound
// variables are written as de Bruijn indices.
std::string canonical_key(const Term& t);

// Throws InvalidPosition.
Term subterm_at(const Term& t, const Position& p);
// Throws InvalidPosition, or TypeError when `u` does not have the type of
// the replaced subterm. Context binders may capture free variables of `u`.
Term replace_at(const Term& t, const Position& p, const Term& u);
// All positions of `t` in preorder (which is also lexicographic order).
std::vector<Position> positions(const Term& t);

// Concrete syntax accepted by the parser: juxtaposition, "\x. t".
std::string to_string(const Term& t);

// `base` followed by enough primes to avoid every name in `avoid`.
std::string fresh_name(std::string_view base, const std::set<std::string>& avoid);

}  // namespace hodp

#endif  // HODP_TERM_HPP
