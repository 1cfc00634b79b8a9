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

#ifndef HODP_PCC_HPP
#define HODP_PCC_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hodp/signature.hpp"
#include "hodp/term.hpp"

namespace hodp {

// Inference rules of the pattern computability closure PCC(t1..tn):
//
//   arg        t_i ∈ PCC
//   acc        g u1..um ∈ PCC, i ∈ acc(g)         ⟹  u_i ∈ PCC
//   lam        \y. u ∈ PCC, y ∉ FV(t̄)            ⟹  u ∈ PCC
//   app-left   u y ∈ PCC, y ∉ FV(t̄) ∪ FV(u)       ⟹  u ∈ PCC
//   app-right  y u ∈ PCC, y ∉ FV(t̄) ∪ FV(u),
//              y : U -> T1 -> .. -> Tk -> U, u : U  ⟹  u ∈ PCC
enum class PccRule { Arg, Acc, Lam, AppLeft, AppRight };

std::string_view to_string(PccRule r);

struct PccDerivation {
  Term conclusion;
  PccRule rule = PccRule::Arg;
  // Null for arg; the single premise otherwise.
  std::shared_ptr<const PccDerivation> premise;
  // arg: argument index; acc: accessible index (both 1-based).
  int index = 0;
  // acc: the destructed symbol.
  std::string symbol;
  // lam, app-left, app-right: the variable y.
  std::optional<Variable> fresh;
};

using PccDerivationPtr = std::shared_ptr<const PccDerivation>;

// "arg 2; acc 1" (root premise first).
std::string derivation_summary(const PccDerivation& d);

struct PccMember {
  Term term;
  PccDerivationPtr derivation;
};

// Members are kept up to α-equivalence, in discovery order.
class PccClosure {
 public:
  const std::vector<PccMember>& members() const { return members_; }
  // Derivation of a member α-equivalent to `t`, or null.
  const PccDerivationPtr& find(const Term& t) const;
  bool contains(const Term& t) const { return find(t) != nullptr; }

 private:
  friend PccClosure pcc_closure(std::span<const Term> args, const Signature& sig);
  bool add(Term t, PccDerivationPtr d);

  std::vector<PccMember> members_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Least fixpoint of the five rules above. Every rule strips a layer from
// its premise, so the closure only holds subterms (up to renaming) of the
// arguments.
PccClosure pcc_closure(std::span<const Term> args, const Signature& sig);

// Re-checks every step of `d` against the rule side conditions. Returns a
// description of the first violation, or nothing.
std::optional<std::string> validate_derivation(const PccDerivation& d, std::span<const Term> args,
                                               const Signature& sig);

struct VariableWitness {
  Variable variable;
  PccDerivationPtr derivation;  // null when underivable
};

struct AdmissibilityReport {
  int rule_id = 0;
  bool admissible = true;
  // One entry per free variable of the rhs, sorted.
  std::vector<VariableWitness> variables;
};

// A rule f l̄ -> r is admissible when FV(r) ⊆ PCC(l̄). Throws MalformedLhs.
AdmissibilityReport is_admissible(const Rule& rule, const Signature& sig);

}  // namespace hodp

#endif  // HODP_PCC_HPP
