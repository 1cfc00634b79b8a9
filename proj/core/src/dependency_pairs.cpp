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

#include "hodp/dependency_pairs.hpp"

#include <algorithm>

namespace hodp {

namespace {

bool defined_spine(const Term& t, const Signature& sig) {
  auto head = head_symbol(t);
  return head && sig.is_defined(*head);
}

void fap_rec(const Term& t, const Signature& sig, const Position& at, std::set<Position>& out) {
  if (defined_spine(t, sig)) {
    out.insert(at);
    // The i-th of n arguments sits at 1^(n-i)·2.
    Position cur = at;
    const Term* node = &t;
    while (node->is_app()) {
      fap_rec(node->arg(), sig, cur.child(2), out);
      cur = cur.child(1);
      node = &node->fun();
    }
    return;
  }
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Sym:
      return;
    case TermKind::Lam:
      fap_rec(t.body(), sig, at.child(1), out);
      return;
    case TermKind::App:
      fap_rec(t.fun(), sig, at.child(1), out);
      fap_rec(t.arg(), sig, at.child(2), out);
      return;
  }
}

}  // namespace

std::set<Position> fap(const Term& t, const Signature& sig) {
  std::set<Position> out;
  fap_rec(t, sig, Position::root(), out);
  return out;
}

int level(const Term& t, const Signature& sig) {
  if (defined_spine(t, sig)) {
    int m = 0;
    for (const Term& a : spine(t).args) m = std::max(m, level(a, sig));
    return 1 + m;
  }
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Sym:
      return 0;
    case TermKind::Lam:
      return level(t.body(), sig);
    case TermKind::App:
      return std::max(level(t.fun(), sig), level(t.arg(), sig));
  }
  return 0;
}

StarCheck check_star_condition(const Rule& rule, const Position& p) {
  StarCheck check;
  Term sub = subterm_at(rule.rhs, p);
  std::set<Variable> outer = free_vars(rule.rhs);
  for (const Variable& v : free_vars(sub))
    if (!outer.count(v)) check.free_bound_vars.push_back(v);
  Type got = type_of(sub);
  Type want = type_of(rule.lhs);
  if (got != want) check.type_mismatch = std::make_pair(got, want);
  check.ok = check.free_bound_vars.empty() && !check.type_mismatch;
  return check;
}

std::string to_string(const DepPair& dp) { return to_string(dp.lhs) + " -> " + to_string(dp.rhs); }

std::vector<DepPair> extract_dps(std::span<const Rule> rules, const Signature& sig) {
  std::vector<DepPair> out;
  for (const Rule& r : rules) {
    lhs_spine(r);
    for (const Position& p : fap(r.rhs, sig)) {
      out.push_back(DepPair{static_cast<int>(out.size()) + 1, r.lhs, subterm_at(r.rhs, p), r.id, p,
                            check_star_condition(r, p)});
    }
  }
  return out;
}

}  // namespace hodp
