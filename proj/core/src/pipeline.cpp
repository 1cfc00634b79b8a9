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

#include "hodp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "hodp/dependency_pairs.hpp"
#include "hodp/error.hpp"
#include "hodp/ordering.hpp"
#include "hodp/pcc.hpp"
#include "hodp/substitution.hpp"

namespace hodp {

namespace {

constexpr std::size_t kPoolCap = 8;

// Terms per (type, depth, binders in scope), smallest first. Leaves are
// constructor constants and the binders; depth counts constructor layers.
class GroundPool {
 public:
  explicit GroundPool(const Signature& sig) : sig_(sig) {}

  const std::vector<Term>& get(const Type& t, int depth, const std::vector<Variable>& env = {}) {
    std::string key = t.to_string() + "@" + std::to_string(depth);
    for (const auto& v : env) key += "|" + v.name + ":" + v.type.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Term> out = t.is_base() ? base(t, depth, env) : arrow(t, depth, env);
    std::stable_sort(out.begin(), out.end(),
                     [](const Term& a, const Term& b) { return a.size() < b.size(); });
    if (out.size() > kPoolCap) out.erase(out.begin() + kPoolCap, out.end());
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<Term> base(const Type& t, int depth, const std::vector<Variable>& env) {
    std::vector<Term> out;
    for (const auto& v : env)
      if (v.type == t) out.push_back(Term::var(v));
    for (const auto& [name, type] : sig_.symbols) {
      if (sig_.is_defined(name)) continue;
      FlatType flat = flatten(type);
      if (flat.result != t.sort()) continue;
      if (flat.args.empty()) {
        out.push_back(Term::sym(name, type));
        continue;
      }
      if (depth == 0) continue;
      std::vector<const std::vector<Term>*> pools;
      bool empty = false;
      for (const auto& a : flat.args) {
        pools.push_back(&get(a, depth - 1, env));
        empty = empty || pools.back()->empty();
      }
      if (empty) continue;
      std::vector<Term> args;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (out.size() >= 4 * kPoolCap) return;
        if (i == pools.size()) {
          out.push_back(Term::apply(Term::sym(name, type), args));
          return;
        }
        for (const auto& u : *pools[i]) {
          args.push_back(u);
          rec(i + 1);
          args.pop_back();
        }
      };
      rec(0);
    }
    return out;
  }

  std::vector<Term> arrow(const Type& t, int depth, const std::vector<Variable>& env) {
    FlatType flat = flatten(t);
    std::vector<Variable> binders;
    std::vector<Variable> inner = env;
    for (std::size_t i = 0; i < flat.args.size(); ++i) {
      binders.push_back({"x" + std::to_string(env.size() + i + 1), flat.args[i]});
      inner.push_back(binders.back());
    }
    std::vector<Term> out;
    for (Term body : get(Type::base(flat.result), depth, inner)) {
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(*it, body);
      out.push_back(body);
    }
    return out;
  }

  const Signature& sig_;
  std::map<std::string, std::vector<Term>> memo_;
};

// Index tuples below `sizes` by increasing sum, lexicographic within a sum.
std::vector<std::vector<std::size_t>> tuples_by_sum(const std::vector<std::size_t>& sizes, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t max_sum = 0;
  for (auto n : sizes) max_sum += n - 1;
  std::vector<std::size_t> cur(sizes.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (out.size() >= limit) return;
    if (i == sizes.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < sizes[i] && v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  for (std::size_t s = 0; s <= max_sum && out.size() < limit; ++s) rec(0, s);
  return out;
}

TraceNode pcc_trace(const PccDerivation& d) {
  std::string label(to_string(d.rule));
  switch (d.rule) {
    case PccRule::Arg:
      label += " " + std::to_string(d.index);
      break;
    case PccRule::Acc:
      label += " " + std::to_string(d.index) + " of " + d.symbol;
      break;
    default:
      if (d.fresh) label += " " + d.fresh->name;
      break;
  }
  TraceNode node{label, to_string(d.conclusion), {}};
  if (d.premise) node.children.push_back(pcc_trace(*d.premise));
  return node;
}

TraceNode order_trace(const OrderWitness& w) {
  TraceNode node{w.clause, to_string(w.lhs) + " " + w.relation + " " + to_string(w.rhs), {}};
  for (const auto& p : w.premises) node.children.push_back(order_trace(*p));
  return node;
}

Precedence merged_precedence(const RewriteSystem& system, const std::optional<std::string>& text) {
  Precedence prec = text ? Precedence::parse(*text) : Precedence{};
  for (const auto& [f, g] : prec.edges()) {
    for (const auto& s : {f, g})
      if (!system.signature.symbols.count(s)) throw Error("unknown symbol in precedence: " + s);
  }
  for (const auto& [f, g] : system.precedence_hints) prec.add(f, g);
  return prec;
}

}  // namespace

std::vector<Term> seed_terms(const RewriteSystem& system, std::size_t count, int depth) {
  GroundPool pool(system.signature);
  std::vector<std::vector<Term>> per_rule;
  for (const auto& rule : system.rules) {
    std::set<Variable> fv = free_vars(rule.lhs);
    std::vector<Variable> vars(fv.begin(), fv.end());
    std::vector<std::vector<Term>> choices;
    std::vector<std::size_t> sizes;
    for (const auto& v : vars) {
      std::vector<Term> c = pool.get(v.type, depth);
      if (c.empty()) c.push_back(Term::var(v));
      sizes.push_back(c.size());
      choices.push_back(std::move(c));
    }
    std::vector<Term> instances;
    for (const auto& tuple : tuples_by_sum(sizes, count)) {
      Substitution s;
      for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], choices[i][tuple[i]]);
      instances.push_back(apply_subst(rule.lhs, s));
    }
    per_rule.push_back(std::move(instances));
  }

  std::vector<Term> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; out.size() < count; ++i) {
    bool any = false;
    for (const auto& list : per_rule) {
      if (i >= list.size()) continue;
      any = true;
      if (out.size() < count && seen.insert(canonical_key(list[i])).second) out.push_back(list[i]);
    }
    if (!any) break;
  }
  return out;
}

AnalysisReport run_pipeline(const RewriteSystem& system, const PipelineOptions& options) {
  auto start = std::chrono::steady_clock::now();
  const Signature& sig = system.signature;
  AnalysisReport report;

  for (const auto& s : sig.sorts) report.sorts.push_back({s, is_basic(s, sig)});
  report.defined.assign(sig.defined.begin(), sig.defined.end());
  if (system.rules.empty()) report.notes.push_back("beta-only: no rules, only beta-reduction on simply typed terms");
  report.notes.push_back("dependency pairs keep the original symbols (no marked tuple symbols)");

  // Admissibility.
  bool admissible = !options.faults.admissibility;
  std::vector<std::string> adm_failures;
  for (const auto& rule : system.rules) {
    AdmissibilityReport a = is_admissible(rule, sig);
    RuleEntry entry{rule.id, to_string(rule.lhs), to_string(rule.rhs), a.admissible, {}};
    for (const auto& w : a.variables) {
      VariableEntry v{w.variable.name, w.variable.type.to_string(), w.derivation != nullptr, "", std::nullopt};
      if (w.derivation) {
        v.summary = derivation_summary(*w.derivation);
        v.derivation = pcc_trace(*w.derivation);
      } else {
        adm_failures.push_back("rule " + std::to_string(rule.id) + ": variable " + w.variable.name +
                               " is not in the computability closure of the lhs arguments");
      }
      entry.variables.push_back(std::move(v));
    }
    admissible = admissible && a.admissible;
    report.rules.push_back(std::move(entry));
  }

  // Dependency pairs and the star condition.
  std::vector<DepPair> dps = extract_dps(system.rules, sig);
  bool star = !options.faults.star;
  std::vector<std::string> star_failures;
  for (const auto& dp : dps) {
    DpEntry entry{dp.id, dp.rule_id, dp.position.to_string(), to_string(dp.lhs), to_string(dp.rhs),
                  level(dp.rhs, sig), {dp.star.ok, {}, std::nullopt}};
    for (const auto& v : dp.star.free_bound_vars) entry.star.free_bound_vars.push_back(v.name);
    if (dp.star.type_mismatch)
      entry.star.type_mismatch = std::make_pair(dp.star.type_mismatch->first.to_string(),
                                                dp.star.type_mismatch->second.to_string());
    if (!dp.star.ok) {
      std::string msg = "dp " + std::to_string(dp.id) + " (rule " + std::to_string(dp.rule_id) + " @ " +
                        dp.position.to_string() + "):";
      for (const auto& v : entry.star.free_bound_vars) msg += " bound variable " + v + " escapes;";
      if (entry.star.type_mismatch)
        msg += " type " + entry.star.type_mismatch->first + " differs from lhs type " + entry.star.type_mismatch->second + ";";
      msg.pop_back();
      star_failures.push_back(msg);
    }
    star = star && dp.star.ok;
    report.dps.push_back(std::move(entry));
  }

  // Reduction pair.
  Precedence required = merged_precedence(system, options.precedence);
  SearchLimits limits{options.max_symbols, options.ge_bound};
  std::optional<Certificate> cert =
      search_precedence(system.rules, dps, sig, limits, required, options.precedence.has_value());
  std::vector<std::string> pair_failures;
  if (cert) {
    CertificateEntry c;
    c.edges.assign(cert->precedence.edges().begin(), cert->precedence.edges().end());
    for (const auto& f : sig.defined) c.statuses[f] = std::string(to_string(cert->precedence.status(f)));
    for (const auto& w : cert->rules) c.witnesses.push_back({"rule", w.id, ">=", order_trace(*w.witness)});
    for (const auto& w : cert->dps) c.witnesses.push_back({"dp", w.id, ">", order_trace(*w.witness)});
    report.certificate = std::move(c);
  } else {
    std::string base = options.precedence ? "given precedence" : "hint precedence";
    pair_failures.push_back("no precedence and status assignment orients all constraints");
    for (const auto& f : check_constraints(system.rules, dps, required, options.ge_bound).failures)
      pair_failures.push_back(to_string(f) + " (" + base + ", multiset statuses)");
  }
  bool oriented = cert.has_value() && !options.faults.reduction_pair;

  for (auto* list : {&star_failures, &adm_failures, &pair_failures})
    report.failures.insert(report.failures.end(), list->begin(), list->end());
  if (options.faults.star) report.failures.push_back("star-condition: forced failure");
  if (options.faults.admissibility) report.failures.push_back("admissibility: forced failure");
  if (options.faults.reduction_pair) report.failures.push_back("reduction-pair: forced failure");

  if (admissible && star && oriented) {
    report.verdict = Verdict::Yes;
  } else {
    report.verdict = Verdict::Maybe;
    report.stage = !star ? "star-condition" : !admissible ? "admissibility" : "reduction-pair";
  }

  if (options.disprove && report.verdict == Verdict::Yes) {
    report.notes.push_back("disprove skipped: termination already shown");
  } else if (options.disprove) {
    ExploreOptions eo{Relation::BetaRules, options.explore_depth, options.explore_nodes, options.internal, false};
    std::vector<Term> seeds = seed_terms(system, options.seed_count);
    std::size_t bounded = 0;
    for (const auto& seed : seeds) {
      ExplorationVerdict v = bounded_explore(seed, system.rules, dps, eo);
      if (v.kind == ExplorationVerdict::Kind::BoundExceeded) ++bounded;
      if (v.kind != ExplorationVerdict::Kind::CycleFound) continue;
      NonterminationWitness w{"beta+rules", to_string(seed), {}, false, {}};
      for (const auto& s : v.trace) w.steps.push_back(format_step(s));
      ExploreOptions co = eo;
      co.relation = Relation::BetaChain;
      try {
        ExplorationVerdict cv = bounded_explore(seed, system.rules, dps, co);
        if (cv.kind == ExplorationVerdict::Kind::CycleFound) {
          w.chain_cycle = true;
          for (const auto& s : cv.trace) w.chain_steps.push_back(format_step(s));
        }
      } catch (const ResourceLimit&) {
        report.notes.push_back("chain exploration exceeded the node budget");
      }
      report.witness = std::move(w);
      report.verdict = Verdict::No;
      report.stage.clear();
      break;
    }
    if (!report.witness) {
      report.notes.push_back("disprove: no cycle from " + std::to_string(seeds.size()) + " seed terms (" +
                             std::to_string(bounded) + " exceeded the depth bound)");
    }
  }

  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hodp
