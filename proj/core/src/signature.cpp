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

#include "hodp/signature.hpp"

#include <algorithm>

#include "hodp/error.hpp"

namespace hodp {

const Type& Signature::type_of_symbol(const std::string& f) const {
  auto it = symbols.find(f);
  if (it == symbols.end()) throw Error("undeclared symbol '" + f + "'");
  return it->second;
}

std::size_t Signature::arity(const std::string& f) const { return flatten(type_of_symbol(f)).args.size(); }

std::string to_string(const Rule& r) { return to_string(r.lhs) + " -> " + to_string(r.rhs); }

namespace {

void polarity_rec(const Type& t, bool positive, const Position& at, bool want_positive,
                  std::set<Position>& out) {
  if (t.is_base()) {
    if (positive == want_positive) out.insert(at);
    return;
  }
  polarity_rec(t.domain(), !positive, at.child(1), want_positive, out);
  polarity_rec(t.codomain(), positive, at.child(2), want_positive, out);
}

void occurrences_rec(const std::string& sort, const Type& t, const Position& at,
                     std::set<Position>& out) {
  if (t.is_base()) {
    if (t.sort() == sort) out.insert(at);
    return;
  }
  occurrences_rec(sort, t.domain(), at.child(1), out);
  occurrences_rec(sort, t.codomain(), at.child(2), out);
}

}  // namespace

std::set<Position> positions_of_polarity(const Type& t, Polarity polarity) {
  std::set<Position> out;
  polarity_rec(t, true, Position::root(), polarity == Polarity::Positive, out);
  return out;
}

std::set<Position> occurrences(const std::string& sort, const Type& t) {
  std::set<Position> out;
  occurrences_rec(sort, t, Position::root(), out);
  return out;
}

std::set<Position> leaf_positions(const Type& t) {
  std::set<Position> out = positions_of_polarity(t, Polarity::Positive);
  out.merge(positions_of_polarity(t, Polarity::Negative));
  return out;
}

std::set<int> accessible_args(const std::string& f, const Signature& sig) {
  FlatType flat = flatten(sig.type_of_symbol(f));
  std::set<int> acc;
  for (std::size_t i = 0; i < flat.args.size(); ++i) {
    std::set<Position> occ = occurrences(flat.result, flat.args[i]);
    std::set<Position> pos = positions_of_polarity(flat.args[i], Polarity::Positive);
    if (std::includes(pos.begin(), pos.end(), occ.begin(), occ.end())) acc.insert(static_cast<int>(i) + 1);
  }
  return acc;
}

bool is_basic(const std::string& sort, const Signature& sig) {
  for (const auto& [name, type] : sig.symbols) {
    FlatType flat = flatten(type);
    if (flat.result != sort) continue;
    for (int i : accessible_args(name, sig))
      if (!flat.args[i - 1].is_base()) return false;
  }
  return true;
}

Spine lhs_spine(const Rule& rule) {
  Spine s = spine(rule.lhs);
  if (!s.head.is_sym())
    throw MalformedLhs("rule " + std::to_string(rule.id) + ": left hand-side '" + to_string(rule.lhs) +
                       "' is not headed by a function symbol");
  return s;
}

Signature classify_symbols(Signature sig, std::span<const Rule> rules) {
  sig.defined.clear();
  for (const Rule& r : rules) {
    Spine s = lhs_spine(r);
    if (!sig.symbols.count(s.head.name()))
      throw MalformedLhs("rule " + std::to_string(r.id) + ": head '" + s.head.name() + "' is not declared");
    sig.defined.insert(s.head.name());
  }
  return sig;
}

}  // namespace hodp
