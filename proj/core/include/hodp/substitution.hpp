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

#ifndef HODP_SUBSTITUTION_HPP
#define HODP_SUBSTITUTION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodp/term.hpp"

namespace hodp {

// Finite, type-preserving map from variables to terms.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Variable, Term>> init);

  // Throws TypeError if `t` does not have the type of `v`.
  void bind(const Variable& v, Term t);
  void erase(const Variable& v) { map_.erase(v); }
  const Term* find(const Variable& v) const;
  bool contains(const Variable& v) const { return map_.count(v) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<Variable, Term>& bindings() const { return map_; }

  // "{X ↦ 0, L ↦ nil}"
  std::string to_string() const;

 private:
  std::map<Variable, Term> map_;
};

// Simultaneous capture-avoiding substitution. No β-reduction happens: an
// instantiated `F X` stays an application.
Term apply_subst(const Term& t, const Substitution& s);

// Contracts a redex (\x. u) v to u{x ↦ v}. Precondition: `redex` is one.
Term beta_contract(const Term& redex);
bool is_beta_redex(const Term& t);

struct BetaStep {
  Position position;
  Term result;
};

// Every one-step β-reduct of `t`, in position order.
std::vector<BetaStep> beta_steps(const Term& t);

// Syntactic matching modulo α. Returns the unique σ with dom(σ) ⊆ FV(l)
// and lσ =α t, or nothing. A pattern variable is never bound to a term
// that mentions a variable bound in `t` above the matched position.
std::optional<Substitution> match_pattern(const Term& pattern, const Term& t);

}  // namespace hodp

#endif  // HODP_SUBSTITUTION_HPP
