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

#include "hodp/ordering.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "hodp/error.hpp"
#include "hodp/substitution.hpp"

namespace hodp {

std::string_view to_string(Status s) { return s == Status::Mul ? "mul" : "lex"; }

// ---------------------------------------------------------------------------
// Precedence

void Precedence::add(const std::string& greater, const std::string& smaller) {
  if (greater == smaller || closure_.count({smaller, greater}))
    throw Error("precedence edge " + greater + " > " + smaller + " closes a cycle");
  if (!edges_.insert({greater, smaller}).second) return;
  // Everything above `greater` (and itself) now dominates everything below
  // `smaller` (and itself).
  std::vector<std::string> above{greater}, below{smaller};
  for (const auto& [a, b] : closure_) {
    if (b == greater) above.push_back(a);
    if (a == smaller) below.push_back(b);
  }
  for (const auto& a : above)
    for (const auto& b : below) closure_.insert({a, b});
}

bool Precedence::greater(const std::string& f, const std::string& g) const { return closure_.count({f, g}) != 0; }

Status Precedence::status(const std::string& f) const {
  auto it = statuses_.find(f);
  return it == statuses_.end() ? Status::Mul : it->second;
}

Precedence Precedence::parse(std::string_view text) {
  Precedence p;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view chain = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::vector<std::string> names;
    std::size_t s = 0;
    while (true) {
      std::size_t gt = chain.find('>', s);
      names.push_back(trim(chain.substr(s, gt == std::string_view::npos ? chain.npos : gt - s)));
      if (gt == std::string_view::npos) break;
      s = gt + 1;
    }
    if (!(names.size() == 1 && names[0].empty() && comma == std::string_view::npos && start == 0)) {
      if (names.size() < 2) throw Error("malformed precedence '" + std::string(chain) + "'");
      for (const auto& n : names)
        if (n.empty()) throw Error("malformed precedence '" + std::string(chain) + "'");
      for (std::size_t i = 0; i + 1 < names.size(); ++i) p.add(names[i], names[i + 1]);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

std::string Precedence::to_string() const {
  std::string out;
  for (const auto& [f, g] : edges_) {
    if (!out.empty()) out += ", ";
    out += f + ">" + g;
  }
  return out;
}

std::string to_string(const OrderWitness& w, int indent) {
  std::string out(static_cast<std::size_t>(indent) * 2, ' ');
  out += "[" + w.clause + "] " + to_string(w.lhs) + " " + w.relation + " " + to_string(w.rhs) + "\n";
  for (const auto& p : w.premises) out += to_string(*p, indent + 1);
  return out;
}

// ---------------------------------------------------------------------------
// HorpoPair

namespace {

OrderWitnessPtr witness(std::string relation, std::string clause, const Term& s, const Term& t,
                        std::vector<OrderWitnessPtr> premises = {}) {
  return std::make_shared<const OrderWitness>(
      OrderWitness{std::move(relation), std::move(clause), s, t, std::move(premises)});
}

bool comparable(const Term& s, const Term& t) {
  return s.type() && t.type() && same_skeleton(*s.type(), *t.type());
}

}  // namespace

HorpoPair::HorpoPair(const Precedence& prec, int beta_bound)
    : order_([prec](const std::string& f, const std::string& g) { return prec.greater(f, g); }),
      statuses_(prec.statuses()),
      beta_bound_(beta_bound) {}

HorpoPair::HorpoPair(SymbolOrder order, std::map<std::string, Status> statuses, int beta_bound)
    : order_(std::move(order)), statuses_(std::move(statuses)), beta_bound_(beta_bound) {}

Status HorpoPair::status_of(const std::string& f) const {
  auto it = statuses_.find(f);
  return it == statuses_.end() ? Status::Mul : it->second;
}

OrderWitnessPtr HorpoPair::core(const Term& s, const Term& t) {
  if (!comparable(s, t)) return nullptr;
  std::string key = canonical_key(s);
  key += '\x1f';
  key += canonical_key(t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  OrderWitnessPtr w = core_uncached(s, t);
  memo_.emplace(std::move(key), w);
  return w;
}

// s_i ≥ u for some i, else s > u.
OrderWitnessPtr HorpoPair::covers(const Term& s, const std::vector<Term>& sargs, const Term& u) {
  for (std::size_t i = 0; i < sargs.size(); ++i) {
    if (alpha_eq(sargs[i], u)) return witness("=", "argument " + std::to_string(i + 1), sargs[i], u);
  }
  for (std::size_t i = 0; i < sargs.size(); ++i) {
    if (auto w = core(sargs[i], u)) return w;
  }
  return core(s, u);
}

OrderWitnessPtr HorpoPair::extension(const std::string& f, const std::vector<Term>& sargs,
                                     const std::vector<Term>& targs) {
  if (status_of(f) == Status::Lex) {
    if (sargs.size() != targs.size()) return nullptr;
    for (std::size_t i = 0; i < sargs.size(); ++i) {
      if (alpha_eq(sargs[i], targs[i])) continue;
      return core(sargs[i], targs[i]);
    }
    return nullptr;
  }
  // Multiset: drop α-equal pairs, then every remaining t needs a larger s.
  std::vector<Term> ss = sargs;
  std::vector<Term> ts;
  for (const Term& t : targs) {
    auto it = std::find_if(ss.begin(), ss.end(), [&](const Term& s) { return alpha_eq(s, t); });
    if (it != ss.end())
      ss.erase(it);
    else
      ts.push_back(t);
  }
  if (ss.empty()) return nullptr;
  std::vector<OrderWitnessPtr> premises;
  for (const Term& t : ts) {
    OrderWitnessPtr found;
    for (const Term& s : ss)
      if ((found = core(s, t))) break;
    if (!found) return nullptr;
    premises.push_back(std::move(found));
  }
  // Equal argument counts: ts is empty only if ss is.
  if (premises.empty()) return nullptr;
  if (premises.size() == 1) return premises.front();
  Term lhs = premises.front()->lhs;
  Term rhs = premises.front()->rhs;
  return witness(">", "multiset", lhs, rhs, std::move(premises));
}

OrderWitnessPtr HorpoPair::core_uncached(const Term& s, const Term& t) {
  if (s.is_lam() && t.is_lam()) {
    if (s.annotation() != t.annotation()) return nullptr;
    std::set<std::string> avoid;
    collect_names(s, avoid);
    collect_names(t, avoid);
    Term z = Term::var(fresh_name(s.name(), avoid), s.annotation());
    Term sb = apply_subst(s.body(), Substitution{{s.variable(), z}});
    Term tb = apply_subst(t.body(), Substitution{{t.variable(), z}});
    if (auto w = core(sb, tb)) return witness(">", "abstraction", s, t, {w});
    return nullptr;
  }

  Spine ss = spine(s);
  if (!ss.head.is_sym()) return nullptr;
  const std::string& f = ss.head.name();

  for (std::size_t i = 0; i < ss.args.size(); ++i) {
    if (!comparable(ss.args[i], t)) continue;
    if (alpha_eq(ss.args[i], t)) return witness(">", "subterm " + std::to_string(i + 1), s, t);
    if (auto w = core(ss.args[i], t)) return witness(">", "subterm " + std::to_string(i + 1), s, t, {w});
  }

  Spine ts = spine(t);
  auto cover_all = [&](const std::vector<Term>& us, std::vector<OrderWitnessPtr>& out) {
    for (const Term& u : us) {
      auto w = covers(s, ss.args, u);
      if (!w) return false;
      out.push_back(std::move(w));
    }
    return true;
  };

  if (ts.head.is_sym()) {
    const std::string& g = ts.head.name();
    if (g != f && order_(f, g)) {
      std::vector<OrderWitnessPtr> premises;
      if (cover_all(ts.args, premises)) return witness(">", "precedence " + f + ">" + g, s, t, std::move(premises));
    }
    if (g == f && ts.head.annotation() == ss.head.annotation()) {
      if (auto dec = extension(f, ss.args, ts.args)) {
        std::vector<OrderWitnessPtr> premises{dec};
        if (cover_all(ts.args, premises))
          return witness(">", "status " + std::string(to_string(status_of(f))), s, t, std::move(premises));
      }
    }
    if (t.is_app()) {
      std::vector<OrderWitnessPtr> premises;
      if (cover_all({t.fun(), t.arg()}, premises)) return witness(">", "application", s, t, std::move(premises));
    }
    return nullptr;
  }

  if (t.is_app()) {
    std::vector<Term> parts{ts.head};
    parts.insert(parts.end(), ts.args.begin(), ts.args.end());
    std::vector<OrderWitnessPtr> premises;
    if (cover_all(parts, premises)) return witness(">", "application", s, t, std::move(premises));
  }
  return nullptr;
}

const std::vector<std::pair<Term, int>>& HorpoPair::reducts(const Term& s) {
  std::string key = canonical_key(s);
  if (auto it = reducts_.find(key); it != reducts_.end()) return it->second;
  constexpr std::size_t kMaxReducts = 4096;
  std::vector<std::pair<Term, int>> out;
  std::unordered_set<std::string> seen{key};
  std::deque<std::pair<Term, int>> queue{{s, 0}};
  while (!queue.empty() && out.size() < kMaxReducts) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (d == beta_bound_) continue;
    for (auto& step : beta_steps(cur)) {
      if (!seen.insert(canonical_key(step.result)).second) continue;
      out.emplace_back(step.result, d + 1);
      queue.emplace_back(step.result, d + 1);
    }
  }
  return reducts_.emplace(std::move(key), std::move(out)).first->second;
}

OrderWitnessPtr HorpoPair::strict(const Term& s, const Term& t) {
  if (!comparable(s, t)) return nullptr;
  if (auto w = core(s, t)) return w;
  for (const auto& [r, d] : reducts(s)) {
    std::string clause = "beta " + std::to_string(d);
    if (alpha_eq(r, t)) return witness(">", clause, s, t);
    if (auto w = core(r, t)) return witness(">", clause, s, t, {w});
  }
  return nullptr;
}

OrderWitnessPtr HorpoPair::weak(const Term& s, const Term& t) {
  if (alpha_eq(s, t)) return witness("=", "alpha", s, t);
  if (!comparable(s, t)) return nullptr;
  if (auto w = strict(s, t)) return witness(">=", "strict", s, t, {w});
  return nullptr;
}

OrderWitnessPtr horpo_gt(const Term& s, const Term& t, const Precedence& prec) {
  HorpoPair pair(prec);
  return pair.strict(s, t);
}

OrderWitnessPtr pair_ge(const Term& s, const Term& t, const Precedence& prec, int bound) {
  HorpoPair pair(prec, bound);
  return pair.weak(s, t);
}

// ---------------------------------------------------------------------------
// Constraints and search

std::string to_string(const ConstraintFailure& f) {
  return std::string(f.strict ? "dp " : "rule ") + std::to_string(f.id) + ": " + to_string(f.lhs) +
         (f.strict ? " > " : " >= ") + to_string(f.rhs) + " not derivable";
}

namespace {

ConstraintCheck check_with(ReductionPair& pair, std::span<const Rule> rules, std::span<const DepPair> dps,
                           bool stop_early) {
  ConstraintCheck result;
  Certificate cert;
  for (const DepPair& d : dps) {
    if (auto w = pair.strict(d.lhs, d.rhs))
      cert.dps.push_back({true, d.id, d.lhs, d.rhs, std::move(w)});
    else {
      result.failures.push_back({true, d.id, d.lhs, d.rhs});
      if (stop_early) return result;
    }
  }
  for (const Rule& r : rules) {
    if (auto w = pair.weak(r.lhs, r.rhs))
      cert.rules.push_back({false, r.id, r.lhs, r.rhs, std::move(w)});
    else {
      result.failures.push_back({false, r.id, r.lhs, r.rhs});
      if (stop_early) return result;
    }
  }
  if (result.failures.empty()) result.certificate = std::move(cert);
  return result;
}

void collect_symbols(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Sym:
      out.insert(t.name());
      return;
    case TermKind::Var:
      return;
    case TermKind::App:
      collect_symbols(t.fun(), out);
      collect_symbols(t.arg(), out);
      return;
    case TermKind::Lam:
      collect_symbols(t.body(), out);
      return;
  }
}

}  // namespace

ConstraintCheck check_constraints(std::span<const Rule> rules, std::span<const DepPair> dps,
                                  const Precedence& prec, int ge_bound) {
  HorpoPair pair(prec, ge_bound);
  ConstraintCheck result = check_with(pair, rules, dps, false);
  if (result.certificate) result.certificate->precedence = prec;
  return result;
}

std::set<std::string> constraint_symbols(std::span<const Rule> rules, std::span<const DepPair> dps) {
  std::set<std::string> out;
  for (const Rule& r : rules) {
    collect_symbols(r.lhs, out);
    collect_symbols(r.rhs, out);
  }
  for (const DepPair& d : dps) {
    collect_symbols(d.lhs, out);
    collect_symbols(d.rhs, out);
  }
  return out;
}

namespace {

class PrecedenceSearch {
 public:
  PrecedenceSearch(std::span<const Rule> rules, std::span<const DepPair> dps, std::vector<std::string> candidates,
                   const Precedence& required, int ge_bound)
      : rules_(rules), dps_(dps), candidates_(std::move(candidates)), required_(required), ge_bound_(ge_bound) {
    for (std::size_t i = 0; i < candidates_.size(); ++i) rank_[candidates_[i]] = kUnranked;
  }

  std::optional<std::vector<std::string>> run(const std::map<std::string, Status>& statuses) {
    statuses_ = &statuses;
    chosen_.clear();
    for (auto& [name, r] : rank_) r = kUnranked;
    if (descend()) return chosen_;
    return std::nullopt;
  }

  bool passes(const HorpoPair::SymbolOrder& order) const {
    HorpoPair pair(order, *statuses_, ge_bound_);
    return check_with(pair, rules_, dps_, true).failures.empty();
  }

 private:
  static constexpr std::size_t kUnranked = static_cast<std::size_t>(-1);

  // Chosen symbols are ordered by rank and above every unchosen one; two
  // unchosen symbols are related both ways unless `required` decides.
  bool related(const std::string& f, const std::string& g) const {
    if (f == g) return false;
    if (required_.greater(f, g)) return true;
    if (required_.greater(g, f)) return false;
    auto rf = rank_.find(f), rg = rank_.find(g);
    if (rf == rank_.end() || rg == rank_.end()) return false;
    if (rf->second != kUnranked) return rf->second < rg->second;
    return rg->second == kUnranked;
  }

  bool descend() {
    if (!passes([this](const std::string& f, const std::string& g) { return related(f, g); })) return false;
    if (chosen_.size() == candidates_.size()) return true;
    for (const std::string& c : candidates_) {
      if (rank_[c] != kUnranked) continue;
      bool blocked = false;
      for (const auto& [name, r] : rank_)
        if (r == kUnranked && name != c && required_.greater(name, c)) blocked = true;
      if (blocked) continue;
      rank_[c] = chosen_.size();
      chosen_.push_back(c);
      if (descend()) return true;
      chosen_.pop_back();
      rank_[c] = kUnranked;
    }
    return false;
  }

  std::span<const Rule> rules_;
  std::span<const DepPair> dps_;
  std::vector<std::string> candidates_;
  const Precedence& required_;
  int ge_bound_;
  const std::map<std::string, Status>* statuses_ = nullptr;
  std::map<std::string, std::size_t> rank_;
  std::vector<std::string> chosen_;
};

Precedence with_statuses(const Precedence& base, const std::map<std::string, Status>& statuses) {
  Precedence p = base;
  for (const auto& [f, s] : statuses) p.set_status(f, s);
  return p;
}

}  // namespace

std::optional<Certificate> search_precedence(std::span<const Rule> rules, std::span<const DepPair> dps,
                                             const Signature& sig, const SearchLimits& limits,
                                             const Precedence& required, bool fixed) {
  std::set<std::string> symbols = constraint_symbols(rules, dps);
  std::vector<std::string> defined, constructors;
  for (const auto& s : symbols) (sig.is_defined(s) ? defined : constructors).push_back(s);

  if (!fixed && symbols.size() > limits.max_symbols)
    throw SearchSpaceExceeded(std::to_string(symbols.size()) + " symbols in the ordering constraints exceed the limit of " +
                              std::to_string(limits.max_symbols) + "; supply a precedence explicitly");
  if (defined.size() >= 20) throw SearchSpaceExceeded("too many defined symbols for status enumeration");

  std::vector<std::string> candidates = defined;
  candidates.insert(candidates.end(), constructors.begin(), constructors.end());
  PrecedenceSearch search(rules, dps, candidates, required, limits.ge_bound);

  const std::size_t combos = std::size_t{1} << defined.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::map<std::string, Status> statuses;
    for (std::size_t i = 0; i < defined.size(); ++i)
      statuses[defined[i]] = (mask >> i) & 1 ? Status::Lex : Status::Mul;

    Precedence prec;
    if (fixed) {
      prec = with_statuses(required, statuses);
      ConstraintCheck c = check_constraints(rules, dps, prec, limits.ge_bound);
      if (c.certificate) return c.certificate;
      continue;
    }

    auto order = search.run(statuses);
    if (!order) continue;

    // Thin the total order to a minimal generating set.
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < order->size(); ++i)
      for (std::size_t j = i + 1; j < order->size(); ++j) edges.emplace_back((*order)[i], (*order)[j]);
    auto build = [&](const std::vector<std::pair<std::string, std::string>>& es) {
      Precedence p;
      for (const auto& [f, g] : required.edges()) p.add(f, g);
      for (const auto& [f, g] : es)
        if (!p.greater(f, g)) p.add(f, g);
      return with_statuses(p, statuses);
    };
    for (std::size_t i = 0; i < edges.size();) {
      if (required.edges().count(edges[i])) {
        ++i;
        continue;
      }
      auto trial = edges;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      Precedence p = build(trial);
      HorpoPair pair(p, limits.ge_bound);
      if (check_with(pair, rules, dps, true).failures.empty())
        edges = std::move(trial);
      else
        ++i;
    }
    prec = build(edges);
    ConstraintCheck c = check_constraints(rules, dps, prec, limits.ge_bound);
    if (c.certificate) return c.certificate;
  }
  return std::nullopt;
}

}  // namespace hodp
