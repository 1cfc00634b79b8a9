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

#ifndef HODP_ORDERING_HPP
#define HODP_ORDERING_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hodp/dependency_pairs.hpp"
#include "hodp/signature.hpp"
#include "hodp/term.hpp"

namespace hodp {

enum class Status { Mul, Lex };

std::string_view to_string(Status s);

// Strict partial order on symbols, stored as generating edges f > g and
// compared through their transitive closure, plus a status per symbol
// (multiset unless set otherwise).
class Precedence {
 public:
  // Throws Error when the edge would close a cycle.
  void add(const std::string& greater, const std::string& smaller);
  bool greater(const std::string& f, const std::string& g) const;
  const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }

  Status status(const std::string& f) const;
  void set_status(const std::string& f, Status s) { statuses_[f] = s; }
  const std::map<std::string, Status>& statuses() const { return statuses_; }

  // "f>g,f>h" or "f > g > h"; throws Error on malformed input or cycles.
  static Precedence parse(std::string_view text);
  // "f>g, f>h"
  std::string to_string() const;

 private:
  std::set<std::pair<std::string, std::string>> edges_;
  std::set<std::pair<std::string, std::string>> closure_;
  std::map<std::string, Status> statuses_;
};

// Derivation of s > t, s ≥ t or s =α t in the clause set below.
struct OrderWitness {
  std::string relation;  // ">", ">=", "="
  std::string clause;
  Term lhs;
  Term rhs;
  std::vector<std::shared_ptr<const OrderWitness>> premises;
};

using OrderWitnessPtr = std::shared_ptr<const OrderWitness>;

// Indented multi-line rendering, one comparison per line.
std::string to_string(const OrderWitness& w, int indent = 0);

// The two relations of a reduction pair. A null result means "not
// derivable", never "provably false".
class ReductionPair {
 public:
  virtual ~ReductionPair() = default;
  virtual OrderWitnessPtr strict(const Term& s, const Term& t) = 0;
  virtual OrderWitnessPtr weak(const Term& s, const Term& t) = 0;
};

// A conservative, monotonic fragment of the higher-order recursive path
// ordering. Every comparison requires both sides to have types of the same
// shape (sorts are identified with each other). With s = f s1..sm:
//
//   subterm      s > t             if some s_i ≥ t
//   precedence   s > g t1..tn      if f > g and s covers every t_j
//   status       s > f t1..tm      if s̄ >lex/mul t̄ and s covers every t_j
//   application  s > h t1..tn      (h a variable or abstraction) if s covers
//                                  h and every t_j; s > t1 t2 if s covers both
//   abstraction  \x.u > \x.v       if u > v
//   beta         s > t             if s →β+ s' (at most `beta_bound` steps)
//                                  and s' > t or s' =α t
//
// "s covers u" means s > u or s_i ≥ u for some i, where ≥ is =α or >.
// The beta clause applies at the outermost comparison only.
class HorpoPair : public ReductionPair {
 public:
  using SymbolOrder = std::function<bool(const std::string&, const std::string&)>;

  explicit HorpoPair(const Precedence& prec, int beta_bound = 8);
  // Any relation on symbols; it need not be a partial order.
  HorpoPair(SymbolOrder order, std::map<std::string, Status> statuses, int beta_bound = 8);

  OrderWitnessPtr strict(const Term& s, const Term& t) override;
  // s =α t, or s →β* s' with s' =α t, or s > t.
  OrderWitnessPtr weak(const Term& s, const Term& t) override;

 private:
  OrderWitnessPtr core(const Term& s, const Term& t);
  OrderWitnessPtr core_uncached(const Term& s, const Term& t);
  OrderWitnessPtr covers(const Term& s, const std::vector<Term>& sargs, const Term& u);
  OrderWitnessPtr extension(const std::string& f, const std::vector<Term>& sargs, const std::vector<Term>& targs);
  // β-reducts of `s` reachable in 1..beta_bound steps, breadth first.
  const std::vector<std::pair<Term, int>>& reducts(const Term& s);
  Status status_of(const std::string& f) const;

  SymbolOrder order_;
  std::map<std::string, Status> statuses_;
  int beta_bound_;
  std::unordered_map<std::string, OrderWitnessPtr> memo_;
  std::unordered_map<std::string, std::vector<std::pair<Term, int>>> reducts_;
};

OrderWitnessPtr horpo_gt(const Term& s, const Term& t, const Precedence& prec);
OrderWitnessPtr pair_ge(const Term& s, const Term& t, const Precedence& prec, int bound = 8);

struct ConstraintWitness {
  bool strict = false;  // dependency pair (>) or rule (≥)
  int id = 0;
  Term lhs;
  Term rhs;
  OrderWitnessPtr witness;
};

// Rules weakly decrease, dependency pairs strictly decrease.
struct Certificate {
  Precedence precedence;
  std::vector<ConstraintWitness> rules;
  std::vector<ConstraintWitness> dps;
};

struct ConstraintFailure {
  bool strict = false;
  int id = 0;
  Term lhs;
  Term rhs;
};

// "rule 2: map F (cons X L) >= cons (F X) (map F L) not derivable"
std::string to_string(const ConstraintFailure& f);

struct ConstraintCheck {
  std::optional<Certificate> certificate;
  std::vector<ConstraintFailure> failures;
};

// R ⊆ ≥ and DP ⊆ >.
ConstraintCheck check_constraints(std::span<const Rule> rules, std::span<const DepPair> dps,
                                  const Precedence& prec, int ge_bound = 8);

// Symbols occurring in rules or dependency pairs.
std::set<std::string> constraint_symbols(std::span<const Rule> rules, std::span<const DepPair> dps);

struct SearchLimits {
  std::size_t max_symbols = 8;
  int ge_bound = 8;
};

// Enumerates statuses (all-multiset first, then binary counting over the
// defined symbols by name, lex = 1) and, for each, total orders of the
// constraint symbols extending `required`: defined symbols by name, then
// constructors by name, at each rank. Subtrees are pruned when even the
// most permissive completion fails. The first success is thinned to a
// minimal set of edges and returned.
//
// With `fixed`, the precedence is `required` as given and only statuses are
// searched. Throws SearchSpaceExceeded when more than max_symbols symbols
// would have to be ordered.
std::optional<Certificate> search_precedence(std::span<const Rule> rules, std::span<const DepPair> dps,
                                             const Signature& sig, const SearchLimits& limits,
                                             const Precedence& required = {}, bool fixed = false);

}  // namespace hodp

#endif  // HODP_ORDERING_HPP
