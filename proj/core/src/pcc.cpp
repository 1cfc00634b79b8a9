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

#include "hodp/pcc.hpp"

#include <deque>

#include "hodp/substitution.hpp"

namespace hodp {

std::string_view to_string(PccRule r) {
  switch (r) {
    case PccRule::Arg:
      return "arg";
    case PccRule::Acc:
      return "acc";
    case PccRule::Lam:
      return "lam";
    case PccRule::AppLeft:
      return "app-left";
    case PccRule::AppRight:
      return "app-right";
  }
  return "?";
}

std::string derivation_summary(const PccDerivation& d) {
  std::string step(to_string(d.rule));
  if (d.rule == PccRule::Arg || d.rule == PccRule::Acc) step += " " + std::to_string(d.index);
  if (d.fresh) step += " " + d.fresh->name;
  if (!d.premise) return step;
  return derivation_summary(*d.premise) + "; " + step;
}

const PccDerivationPtr& PccClosure::find(const Term& t) const {
  static const PccDerivationPtr none;
  auto it = index_.find(canonical_key(t));
  return it == index_.end() ? none : members_[it->second].derivation;
}

bool PccClosure::add(Term t, PccDerivationPtr d) {
  auto [it, inserted] = index_.emplace(canonical_key(t), members_.size());
  if (!inserted) return false;
  members_.push_back({std::move(t), std::move(d)});
  return true;
}

namespace {

// U -> T1 -> ... -> Tk -> U for some k >= 0, with U the domain.
bool returns_own_domain(const Type& y_type, const Type& u_type) {
  if (!y_type.is_arrow() || y_type.domain() != u_type) return false;
  Type rest = y_type.codomain();
  while (true) {
    if (rest == u_type) return true;
    if (!rest.is_arrow()) return false;
    rest = rest.codomain();
  }
}

bool free_in_any(const Variable& v, std::span<const Term> args) {
  for (const Term& a : args)
    if (occurs_free(v, a)) return true;
  return false;
}

std::shared_ptr<PccDerivation> make(Term conclusion, PccRule rule, PccDerivationPtr premise) {
  return std::make_shared<PccDerivation>(PccDerivation{std::move(conclusion), rule, std::move(premise), 0, {}, std::nullopt});
}

}  // namespace

PccClosure pcc_closure(std::span<const Term> args, const Signature& sig) {
  PccClosure closure;
  std::deque<std::size_t> work;
  auto push = [&](std::shared_ptr<PccDerivation> d) {
    Term t = d->conclusion;
    if (closure.add(std::move(t), std::move(d))) work.push_back(closure.members_.size() - 1);
  };

  for (std::size_t i = 0; i < args.size(); ++i) {
    auto d = make(args[i], PccRule::Arg, nullptr);
    d->index = static_cast<int>(i) + 1;
    push(std::move(d));
  }

  std::set<std::string> arg_names;
  for (const Term& a : args) collect_names(a, arg_names);

  while (!work.empty()) {
    const PccMember member = closure.members_[work.front()];
    work.pop_front();
    const Term& c = member.term;

    // acc
    Spine s = spine(c);
    if (s.head.is_sym() && sig.symbols.count(s.head.name())) {
      for (int i : accessible_args(s.head.name(), sig)) {
        if (static_cast<std::size_t>(i) > s.args.size()) continue;
        auto d = make(s.args[i - 1], PccRule::Acc, member.derivation);
        d->index = i;
        d->symbol = s.head.name();
        push(std::move(d));
      }
    }

    // lam; a binder clashing with FV(t̄) is renamed first (λ-terms are taken
    // modulo α).
    if (c.is_lam()) {
      Variable y = c.variable();
      Term body = c.body();
      if (free_in_any(y, args)) {
        std::set<std::string> avoid = arg_names;
        collect_names(c, avoid);
        Variable renamed{fresh_name(y.name, avoid), y.type};
        body = apply_subst(body, Substitution{{y, Term::var(renamed)}});
        y = renamed;
      }
      auto d = make(std::move(body), PccRule::Lam, member.derivation);
      d->fresh = y;
      push(std::move(d));
    }

    if (c.is_app()) {
      // app-left
      if (c.arg().is_var()) {
        Variable y = c.arg().variable();
        if (!free_in_any(y, args) && !occurs_free(y, c.fun())) {
          auto d = make(c.fun(), PccRule::AppLeft, member.derivation);
          d->fresh = y;
          push(std::move(d));
        }
      }
      // app-right
      if (c.fun().is_var() && c.arg().type()) {
        Variable y = c.fun().variable();
        const Term& u = c.arg();
        if (!free_in_any(y, args) && !occurs_free(y, u) && returns_own_domain(y.type, *u.type())) {
          auto d = make(u, PccRule::AppRight, member.derivation);
          d->fresh = y;
          push(std::move(d));
        }
      }
    }
  }
  return closure;
}

std::optional<std::string> validate_derivation(const PccDerivation& d, std::span<const Term> args,
                                               const Signature& sig) {
  auto fail = [&](const std::string& why) {
    return std::optional<std::string>(std::string(to_string(d.rule)) + " step concluding '" +
                                      to_string(d.conclusion) + "': " + why);
  };
  if (d.rule == PccRule::Arg) {
    if (d.premise) return fail("arg has no premise");
    if (d.index < 1 || static_cast<std::size_t>(d.index) > args.size()) return fail("argument index out of range");
    if (!alpha_eq(d.conclusion, args[d.index - 1])) return fail("not the indexed argument");
    return std::nullopt;
  }
  if (!d.premise) return fail("missing premise");
  if (auto inner = validate_derivation(*d.premise, args, sig)) return inner;
  const Term& p = d.premise->conclusion;

  switch (d.rule) {
    case PccRule::Arg:
      break;
    case PccRule::Acc: {
      Spine s = spine(p);
      if (!s.head.is_sym() || s.head.name() != d.symbol) return fail("premise not headed by " + d.symbol);
      if (!accessible_args(d.symbol, sig).count(d.index)) return fail("index not accessible");
      if (static_cast<std::size_t>(d.index) > s.args.size()) return fail("index beyond applied arguments");
      if (!alpha_eq(d.conclusion, s.args[d.index - 1])) return fail("not the indexed argument");
      return std::nullopt;
    }
    case PccRule::Lam: {
      if (!d.fresh) return fail("missing bound variable");
      if (free_in_any(*d.fresh, args)) return fail("bound variable free in the arguments");
      if (!alpha_eq(p, Term::lam(*d.fresh, d.conclusion))) return fail("premise is not the abstraction");
      return std::nullopt;
    }
    case PccRule::AppLeft: {
      if (!d.fresh) return fail("missing variable");
      if (free_in_any(*d.fresh, args) || occurs_free(*d.fresh, d.conclusion)) return fail("variable not fresh");
      if (!alpha_eq(p, Term::app(d.conclusion, Term::var(*d.fresh)))) return fail("premise is not u y");
      return std::nullopt;
    }
    case PccRule::AppRight: {
      if (!d.fresh) return fail("missing variable");
      if (free_in_any(*d.fresh, args) || occurs_free(*d.fresh, d.conclusion)) return fail("variable not fresh");
      if (!d.conclusion.type() || !returns_own_domain(d.fresh->type, *d.conclusion.type()))
        return fail("variable type is not U -> .. -> U");
      if (!alpha_eq(p, Term::app(Term::var(*d.fresh), d.conclusion))) return fail("premise is not y u");
      return std::nullopt;
    }
  }
  return fail("unknown rule");
}

AdmissibilityReport is_admissible(const Rule& rule, const Signature& sig) {
  Spine s = lhs_spine(rule);
  PccClosure closure = pcc_closure(s.args, sig);
  AdmissibilityReport report;
  report.rule_id = rule.id;
  for (const Variable& v : free_vars(rule.rhs)) {
    PccDerivationPtr d = closure.find(Term::var(v));
    if (!d) report.admissible = false;
    report.variables.push_back({v, std::move(d)});
  }
  return report;
}

}  // namespace hodp
