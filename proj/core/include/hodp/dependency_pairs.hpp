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

#ifndef HODP_DEPENDENCY_PAIRS_HPP
#define HODP_DEPENDENCY_PAIRS_HPP

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hodp/signature.hpp"
#include "hodp/term.hpp"

namespace hodp {

// Full application positions. A maximal spine f t1..tn with f defined
// contributes its own root and the positions 1^(n-i)·2·fap(t_i); any other
// application t u contributes 1·fap(t) ∪ 2·fap(u); \x. t contributes
// 1·fap(t); variables and bare constructors contribute nothing.
std::set<Position> fap(const Term& t, const Signature& sig);

// Nesting depth of defined-symbol spines (0 for terms without any).
int level(const Term& t, const Signature& sig);

struct StarCheck {
  bool ok = true;
  // FV(r|p) \ FV(r): variables bound above p.
  std::vector<Variable> free_bound_vars;
  // {got, want} when the type of r|p differs from the type of l.
  std::optional<std::pair<Type, Type>> type_mismatch;
};

// Side condition on a rule l -> r and p ∈ fap(r): FV(r|p) ⊆ FV(r) and
// r|p has the type of l.
StarCheck check_star_condition(const Rule& rule, const Position& p);

// l -> r|p. Original symbols are kept; there are no marked tuple symbols.
struct DepPair {
  int id = 0;  // 1-based
  Term lhs;
  Term rhs;
  int rule_id = 0;
  Position position;
  StarCheck star;
};

std::string to_string(const DepPair& dp);

// One pair per rule and fap position of its rhs, in rule order and then
// position order. Throws MalformedLhs.
std::vector<DepPair> extract_dps(std::span<const Rule> rules, const Signature& sig);

}  // namespace hodp

#endif  // HODP_DEPENDENCY_PAIRS_HPP
