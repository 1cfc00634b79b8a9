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

#ifndef HODP_SIGNATURE_HPP
#define HODP_SIGNATURE_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hodp/position.hpp"
#include "hodp/term.hpp"
#include "hodp/type.hpp"

namespace hodp {

// Declared sorts and symbols together with the defined/constructor split.
// `defined` is always recomputed from the rules (see classify_symbols).
struct Signature {
  std::set<std::string> sorts;
  std::map<std::string, Type> symbols;
  std::set<std::string> defined;

  bool is_defined(const std::string& f) const { return defined.count(f) != 0; }
  bool is_constructor(const std::string& f) const { return symbols.count(f) && !is_defined(f); }
  const Type& type_of_symbol(const std::string& f) const;
  // Number of arrows in the fully flattened declared type.
  std::size_t arity(const std::string& f) const;
  Term symbol(const std::string& f) const { return Term::sym(f, type_of_symbol(f)); }
};

struct Rule {
  int id = 0;  // 1-based, in input order
  Term lhs;
  Term rhs;
};

std::string to_string(const Rule& r);

struct RewriteSystem {
  Signature signature;
  std::vector<Rule> rules;
  // Precedence hints from the input, f > g.
  std::vector<std::pair<std::string, std::string>> precedence_hints;
};

enum class Polarity { Positive, Negative };

// pos+(B) = {ε}, pos-(B) = ∅, posδ(T -> U) = 1·pos-δ(T) ∪ 2·posδ(U).
std::set<Position> positions_of_polarity(const Type& t, Polarity polarity);

// Positions p with t|p = B.
std::set<Position> occurrences(const std::string& sort, const Type& t);

// Positions of all base leaves of `t`.
std::set<Position> leaf_positions(const Type& t);

// 1-based indices i such that the output sort of f occurs only positively
// in the i-th argument type of f's flattened type.
std::set<int> accessible_args(const std::string& f, const Signature& sig);

// Every symbol with output sort `sort` has only base-typed accessible
// arguments.
bool is_basic(const std::string& sort, const Signature& sig);

// Recomputes sig.defined as the set of rule lhs head symbols. Throws
// MalformedLhs when a lhs is not headed by a declared symbol.
Signature classify_symbols(Signature sig, std::span<const Rule> rules);

// Head symbol and arguments of a rule lhs. Throws MalformedLhs.
Spine lhs_spine(const Rule& rule);

}  // namespace hodp

#endif  // HODP_SIGNATURE_HPP
