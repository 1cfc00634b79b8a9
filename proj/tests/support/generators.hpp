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

// Hand-rolled random generators for property tests, plus an independent
// first-order dependency-pair extractor used as an oracle.

#ifndef HODP_TESTS_GENERATORS_HPP
#define HODP_TESTS_GENERATORS_HPP

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hodp/signature.hpp"
#include "hodp/substitution.hpp"
#include "hodp/term.hpp"
#include "hodp/type.hpp"

namespace hodp::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

// Types over `sorts` with arrow nesting at most `depth`.
inline Type random_type(Rng& rng, const std::vector<std::string>& sorts, int depth) {
  if (depth == 0 || coin(rng, 0.35)) return Type::base(pick(rng, sorts));
  return Type::arrow(random_type(rng, sorts, depth - 1), random_type(rng, sorts, depth - 1));
}

inline Type N() { return Type::base("N"); }
inline Type L() { return Type::base("L"); }
inline Type NN() { return Type::arrow(N(), N()); }

// 0, s, nil, cons over sorts N and L.
inline Signature list_signature() {
  Signature sig;
  sig.sorts = {"N", "L"};
  sig.symbols = {{"0", N()}, {"s", NN()}, {"nil", L()}, {"cons", Type::arrows({N(), L()}, L())}};
  return sig;
}

// Type-directed generator of well-typed terms. Leaves are symbols and
// variables in scope; inner nodes are abstractions and applications whose
// argument type is drawn from `arg_types`.
class TermGen {
 public:
  TermGen(Rng& rng, std::vector<Term> leaves, std::vector<Type> arg_types)
      : rng_(rng), leaves_(std::move(leaves)), arg_types_(std::move(arg_types)) {}

  // Size is at most `budget` when a term is returned.
  std::optional<Term> gen(const Type& t, int budget) {
    std::vector<Term> scope = leaves_;
    for (const auto& v : env_) scope.push_back(Term::var(v));
    std::vector<Term> fits;
    for (const auto& l : scope)
      if (l.type() && *l.type() == t) fits.push_back(l);

    for (int attempt = 0; attempt < 6; ++attempt) {
      int choice = uniform(rng_, 0, 2);
      if (budget <= 2 || choice == 0) {
        if (!fits.empty()) return pick(rng_, fits);
        if (t.is_arrow() && budget >= 2) choice = 1;
        else return std::nullopt;
      }
      if (choice == 1 && t.is_arrow()) {
        Variable x{"x" + std::to_string(counter_++), t.domain()};
        env_.push_back(x);
        auto body = gen(t.codomain(), budget - 1);
        env_.pop_back();
        if (body) return Term::lam(x, *body);
        continue;
      }
      if (budget >= 3) {
        Type a = pick(rng_, arg_types_);
        int left = uniform(rng_, 1, budget - 2);
        auto f = gen(Type::arrow(a, t), left);
        if (!f) continue;
        auto x = gen(a, budget - 1 - static_cast<int>(f->size()));
        if (!x) continue;
        return Term::app(*f, *x);
      }
    }
    if (!fits.empty()) return pick(rng_, fits);
    return std::nullopt;
  }

  // Retries until a term is produced.
  Term must(const Type& t, int budget) {
    for (;;)
      if (auto r = gen(t, budget)) return *r;
  }

 private:
  Rng& rng_;
  std::vector<Term> leaves_;
  std::vector<Type> arg_types_;
  std::vector<Variable> env_;
  int counter_ = 0;
};

// A random type-preserving substitution for the given variables.
inline Substitution random_subst(Rng& rng, const std::set<Variable>& vars, TermGen& gen, int budget) {
  Substitution s;
  for (const auto& v : vars)
    if (coin(rng, 0.7))
      if (auto t = gen.gen(v.type, budget)) s.bind(v, *t);
  return s;
}

// (\z. t[p := z]) t|p for a random position p not below a binder, so
// that the result β-reduces to `t` in one step.
inline std::optional<Term> beta_expand(Rng& rng, const Term& t, int counter) {
  std::vector<Position> candidates;
  for (const auto& p : positions(t)) {
    bool under_binder = false;
    Position q;
    for (std::size_t k = 0; k < p.size() && !under_binder; ++k) {
      under_binder = subterm_at(t, q).is_lam();
      q = q.child(p[k]);
    }
    if (!under_binder) candidates.push_back(p);
  }
  if (candidates.empty()) return std::nullopt;
  Position p = pick(rng, candidates);
  Term sub = subterm_at(t, p);
  Variable z{"z" + std::to_string(counter), *sub.type()};
  return Term::app(Term::lam(z, replace_at(t, p, Term::var(z))), sub);
}

// ---- First-order systems and the classical dependency-pair oracle ----

struct FoTerm {
  std::string head;  // symbol or variable name
  bool is_var = false;
  std::vector<FoTerm> args;
};

struct FoRule {
  FoTerm lhs;
  FoTerm rhs;
};

struct FoSystem {
  std::map<std::string, int> arity;  // all symbols, single sort N
  std::vector<FoRule> rules;
};

inline Term to_term(const FoTerm& t) {
  if (t.is_var) return Term::var(t.head, N());
  std::vector<Type> args(t.args.size(), N());
  std::vector<Term> targs;
  for (const auto& a : t.args) targs.push_back(to_term(a));
  return Term::apply(Term::sym(t.head, Type::arrows(args, N())), targs);
}

inline RewriteSystem to_system(const FoSystem& fo) {
  RewriteSystem sys;
  sys.signature.sorts = {"N"};
  for (const auto& [f, n] : fo.arity) sys.signature.symbols.insert_or_assign(f, Type::arrows(std::vector<Type>(n, N()), N()));
  int id = 1;
  for (const auto& r : fo.rules) sys.rules.push_back({id++, to_term(r.lhs), to_term(r.rhs)});
  sys.signature = classify_symbols(sys.signature, sys.rules);
  return sys;
}

// Up to 5 rules over up to 6 symbols: constructors c0/0, c1/1, c2/2 and
// defined symbols f1.. with arities 1..3.
inline FoSystem random_fo_system(Rng& rng) {
  FoSystem fo;
  std::vector<std::string> cons{"c0", "c1", "c2"};
  fo.arity = {{"c0", 0}, {"c1", 1}, {"c2", 2}};
  int ndef = uniform(rng, 1, 3);
  std::vector<std::string> defs;
  for (int i = 1; i <= ndef; ++i) {
    defs.push_back("f" + std::to_string(i));
    fo.arity[defs.back()] = uniform(rng, 1, 3);
  }
  std::vector<std::string> vars{"X", "Y", "Z"};

  std::function<FoTerm(int, bool, std::set<std::string>&)> pattern = [&](int depth, bool linear,
                                                                          std::set<std::string>& used) {
    if (depth == 0 || coin(rng, 0.5)) {
      std::string v = pick(rng, vars);
      if (linear && used.count(v)) v += std::to_string(used.size());
      used.insert(v);
      return FoTerm{v, true, {}};
    }
    FoTerm t{pick(rng, cons), false, {}};
    for (int i = 0; i < fo.arity[t.head]; ++i) t.args.push_back(pattern(depth - 1, linear, used));
    return t;
  };
  std::function<FoTerm(int, const std::vector<std::string>&)> rhs = [&](int depth,
                                                                       const std::vector<std::string>& vs) {
    if (depth == 0 || coin(rng, 0.3)) {
      if (!vs.empty() && coin(rng, 0.7)) return FoTerm{pick(rng, vs), true, {}};
      return FoTerm{"c0", false, {}};
    }
    std::vector<std::string> heads = defs;
    heads.insert(heads.end(), cons.begin(), cons.end());
    FoTerm t{pick(rng, heads), false, {}};
    for (int i = 0; i < fo.arity[t.head]; ++i) t.args.push_back(rhs(depth - 1, vs));
    return t;
  };

  int nrules = uniform(rng, 1, 5);
  for (int r = 0; r < nrules; ++r) {
    std::set<std::string> used;
    FoTerm lhs{defs[static_cast<std::size_t>(r) % defs.size()], false, {}};
    bool linear = coin(rng, 0.7);
    for (int i = 0; i < fo.arity[lhs.head]; ++i) lhs.args.push_back(pattern(2, linear, used));
    std::vector<std::string> vs(used.begin(), used.end());
    fo.rules.push_back({lhs, rhs(3, vs)});
  }
  // Defined symbols that head no rule are constructors in the oracle too.
  return fo;
}

// Classical extraction: for every rule l -> r and every subterm t of r
// whose root symbol heads some lhs, a pair l -> t. Positions are reported
// in the curried encoding: argument i of an n-ary node sits at 1^(n-i).2.
struct FoPair {
  int rule_id;
  std::string position;
  std::string rhs_key;
  friend auto operator<=>(const FoPair&, const FoPair&) = default;
};

inline std::vector<FoPair> classical_dps(const FoSystem& fo) {
  std::set<std::string> defined;
  for (const auto& r : fo.rules) defined.insert(r.lhs.head);
  std::vector<FoPair> out;
  for (std::size_t i = 0; i < fo.rules.size(); ++i) {
    std::function<void(const FoTerm&, std::string)> walk = [&](const FoTerm& t, std::string pos) {
      if (t.is_var) return;
      if (defined.count(t.head))
        out.push_back({static_cast<int>(i) + 1, pos.empty() ? "ε" : pos, canonical_key(to_term(t))});
      std::size_t n = t.args.size();
      for (std::size_t k = 0; k < n; ++k) {
        std::string p = pos;
        for (std::size_t j = 0; j < n - k - 1; ++j) p += p.empty() ? "1" : ".1";
        p += p.empty() ? "2" : ".2";
        walk(t.args[k], p);
      }
    };
    walk(fo.rules[i].rhs, "");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hodp::testing

#endif  // HODP_TESTS_GENERATORS_HPP
