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

#include "hodp/rewrite.hpp"

#include <algorithm>
#include <unordered_map>

#include "hodp/error.hpp"

namespace hodp {

std::string step_label(const Step& s) {
  switch (s.kind) {
    case StepKind::Beta:
      return "beta";
    case StepKind::Rule:
      return "rule" + std::to_string(s.id);
    case StepKind::Dp:
      return "dp" + std::to_string(s.id);
  }
  return "?";
}

std::string format_step(const Step& s) {
  return step_label(s) + "@" + s.position.to_string() + ": " + to_string(s.from) + " => " + to_string(s.to);
}

namespace {

const Rule* find_rule(std::span<const Rule> rules, int id) {
  for (const Rule& r : rules)
    if (r.id == id) return &r;
  return nullptr;
}

const DepPair* find_dp(std::span<const DepPair> dps, int id) {
  for (const DepPair& d : dps)
    if (d.id == id) return &d;
  return nullptr;
}

std::optional<Substitution> match_typed(const Term& lhs, const Term& t) {
  if (!lhs.type() || !t.type() || *lhs.type() != *t.type()) return std::nullopt;
  return match_pattern(lhs, t);
}

void steps_at(const Term& t, const Position& p, const Term& sub, std::span<const Rule> rules, bool with_beta,
              std::vector<Step>& out) {
  if (with_beta && is_beta_redex(sub))
    out.push_back({StepKind::Beta, 0, p, t, replace_at(t, p, beta_contract(sub)), {}});
  for (const Rule& r : rules) {
    if (auto sigma = match_typed(r.lhs, sub))
      out.push_back({StepKind::Rule, r.id, p, t, replace_at(t, p, apply_subst(r.rhs, *sigma)), *sigma});
  }
}

std::vector<Step> collect_steps(const Term& t, std::span<const Rule> rules, bool with_beta, bool with_root) {
  std::vector<Step> out;
  for (const Position& p : positions(t)) {
    if (!with_root && p.is_root()) continue;
    steps_at(t, p, subterm_at(t, p), rules, with_beta, out);
  }
  return out;
}

}  // namespace

std::vector<Step> rewrite_steps(const Term& t, std::span<const Rule> rules) {
  return collect_steps(t, rules, true, true);
}

std::vector<Step> internal_steps(const Term& t, std::span<const Rule> rules, InternalMode mode) {
  return collect_steps(t, rules, mode == InternalMode::All, false);
}

std::vector<Step> dp_top_steps(const Term& t, std::span<const DepPair> dps) {
  std::vector<Step> out;
  for (const DepPair& d : dps) {
    if (auto sigma = match_typed(d.lhs, t))
      out.push_back({StepKind::Dp, d.id, Position::root(), t, apply_subst(d.rhs, *sigma), *sigma});
  }
  return out;
}

namespace {

void chain_rec(const Term& t, std::span<const Rule> rules, std::span<const DepPair> dps, int remaining,
               InternalMode mode, std::vector<Step>& prefix, std::vector<std::vector<Step>>& out) {
  for (Step& s : dp_top_steps(t, dps)) {
    out.push_back(prefix);
    out.back().push_back(std::move(s));
  }
  if (remaining == 0) return;
  for (Step& s : internal_steps(t, rules, mode)) {
    Term next = s.to;
    prefix.push_back(std::move(s));
    chain_rec(next, rules, dps, remaining - 1, mode, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Step>> chain_steps(const Term& t, std::span<const Rule> rules,
                                           std::span<const DepPair> dps, int k, InternalMode mode) {
  std::vector<std::vector<Step>> out;
  std::vector<Step> prefix;
  chain_rec(t, rules, dps, k, mode, prefix, out);
  return out;
}

bool replay_step(const Step& s, std::span<const Rule> rules, std::span<const DepPair> dps) {
  try {
    Term sub = subterm_at(s.from, s.position);
    switch (s.kind) {
      case StepKind::Beta:
        return is_beta_redex(sub) && alpha_eq(replace_at(s.from, s.position, beta_contract(sub)), s.to);
      case StepKind::Rule: {
        const Rule* r = find_rule(rules, s.id);
        if (!r) return false;
        auto sigma = match_typed(r->lhs, sub);
        return sigma && alpha_eq(replace_at(s.from, s.position, apply_subst(r->rhs, *sigma)), s.to);
      }
      case StepKind::Dp: {
        const DepPair* d = find_dp(dps, s.id);
        if (!d || !s.position.is_root()) return false;
        auto sigma = match_typed(d->lhs, sub);
        return sigma && alpha_eq(apply_subst(d->rhs, *sigma), s.to);
      }
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

std::string_view to_string(ExplorationVerdict::Kind k) {
  switch (k) {
    case ExplorationVerdict::Kind::AllTerminated:
      return "AllTerminated";
    case ExplorationVerdict::Kind::BoundExceeded:
      return "BoundExceeded";
    case ExplorationVerdict::Kind::CycleFound:
      return "CycleFound";
  }
  return "?";
}

namespace {

struct StateInfo {
  enum class Status { OnPath, Done, Truncated } status = Status::OnPath;
  int height = 0;     // Done: longest trace from here
  int remaining = 0;  // Truncated: depth budget it was explored with
  std::size_t graph_id = 0;
  // Done: successor realizing `height`.
  std::optional<Step> longest;
};

class Explorer {
 public:
  Explorer(std::span<const Rule> rules, std::span<const DepPair> dps, const ExploreOptions& options)
      : rules_(rules), dps_(dps), options_(options) {}

  ExplorationVerdict run(const Term& root);

 private:
  struct Frame {
    Term term;
    std::string key;
    int depth;
    std::vector<Step> succs;
    std::size_t next = 0;
    int height = 0;
    bool truncated = false;
    std::optional<Step> longest;
  };

  std::vector<Step> successors(const Term& t) const {
    if (options_.relation == Relation::BetaRules) return rewrite_steps(t, rules_);
    std::vector<Step> out;
    for (auto& b : beta_steps(t)) out.push_back({StepKind::Beta, 0, b.position, t, b.result, {}});
    for (Step& s : internal_steps(t, rules_, InternalMode::RulesOnly)) out.push_back(std::move(s));
    for (Step& s : dp_top_steps(t, dps_)) out.push_back(std::move(s));
    std::stable_sort(out.begin(), out.end(), [](const Step& a, const Step& b) {
      if (a.position != b.position) return a.position < b.position;
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.id < b.id;
    });
    return out;
  }

  std::size_t graph_node(const Term& t) {
    if (!options_.record_graph) return 0;
    graph_.states.push_back(to_string(t));
    return graph_.states.size() - 1;
  }

  std::span<const Rule> rules_;
  std::span<const DepPair> dps_;
  const ExploreOptions& options_;
  std::unordered_map<std::string, StateInfo> info_;
  ExplorationGraph graph_;
};

ExplorationVerdict Explorer::run(const Term& root) {
  ExplorationVerdict verdict;
  std::optional<std::vector<Step>> bound_witness;
  std::vector<Frame> stack;
  std::vector<Step> path;  // path[i] leads from stack[i] to stack[i + 1]

  enum class Entered { Pushed, Known, Truncated, Cycle };
  struct EnterResult {
    Entered kind;
    int height = 0;
  };

  auto enter = [&](const Term& t, int depth, const Step* via) -> EnterResult {
    std::string key = canonical_key(t);
    std::size_t from_id = stack.empty() ? 0 : info_.at(stack.back().key).graph_id;
    auto it = info_.find(key);
    if (it == info_.end()) {
      if (info_.size() >= options_.max_nodes)
        throw ResourceLimit("exploration exceeded " + std::to_string(options_.max_nodes) + " states");
      it = info_.emplace(key, StateInfo{}).first;
      it->second.graph_id = graph_node(t);
      if (via && options_.record_graph) graph_.edges.emplace_back(from_id, it->second.graph_id, step_label(*via));
    } else {
      StateInfo& si = it->second;
      if (via && options_.record_graph) graph_.edges.emplace_back(from_id, si.graph_id, step_label(*via));
      if (si.status == StateInfo::Status::OnPath) {
        verdict.kind = ExplorationVerdict::Kind::CycleFound;
        verdict.trace = path;
        verdict.trace.push_back(*via);
        return {Entered::Cycle};
      }
      if (si.status == StateInfo::Status::Done) return {Entered::Known, si.height};
      if (options_.max_depth - depth <= si.remaining) return {Entered::Truncated};
    }
    StateInfo& si = it->second;
    std::vector<Step> succs = successors(t);
    if (depth >= options_.max_depth && !succs.empty()) {
      if (!bound_witness) {
        bound_witness = path;
        if (via) bound_witness->push_back(*via);
        bound_witness->push_back(succs.front());
      }
      si.status = StateInfo::Status::Truncated;
      si.remaining = options_.max_depth - depth;
      return {Entered::Truncated};
    }
    si.status = StateInfo::Status::OnPath;
    if (via) path.push_back(*via);
    stack.push_back(Frame{t, std::move(key), depth, std::move(succs), 0, 0, false, std::nullopt});
    return {Entered::Pushed};
  };

  auto propagate = [](Frame& parent, const Step& via, int height) {
    if (height + 1 > parent.height) {
      parent.height = height + 1;
      parent.longest = via;
    }
  };

  bool root_truncated = enter(root, 0, nullptr).kind == Entered::Truncated;
  int root_height = 0;

  while (!stack.empty()) {
    if (stack.back().next == stack.back().succs.size()) {
      Frame done = std::move(stack.back());
      stack.pop_back();
      StateInfo& si = info_.at(done.key);
      if (done.truncated) {
        si.status = StateInfo::Status::Truncated;
        si.remaining = options_.max_depth - done.depth;
      } else {
        si.status = StateInfo::Status::Done;
        si.height = done.height;
        si.longest = done.longest;
      }
      if (stack.empty()) {
        root_height = done.height;
        root_truncated = done.truncated;
        break;
      }
      path.pop_back();
      Frame& parent = stack.back();
      if (done.truncated)
        parent.truncated = true;
      else
        propagate(parent, parent.succs[parent.next - 1], done.height);
      continue;
    }
    const std::size_t top = stack.size() - 1;
    const Step via = stack[top].succs[stack[top].next++];
    EnterResult res = enter(via.to, stack[top].depth + 1, &via);
    switch (res.kind) {
      case Entered::Cycle:
        verdict.nodes = info_.size();
        verdict.graph = std::move(graph_);
        return verdict;
      case Entered::Pushed:
        break;
      case Entered::Known:
        propagate(stack[top], via, res.height);
        break;
      case Entered::Truncated:
        stack[top].truncated = true;
        break;
    }
  }

  verdict.nodes = info_.size();
  if (root_truncated) {
    verdict.kind = ExplorationVerdict::Kind::BoundExceeded;
    verdict.trace = bound_witness.value_or(std::vector<Step>{});
  } else if (root_height > options_.max_depth) {
    verdict.kind = ExplorationVerdict::Kind::BoundExceeded;
    // Follow the longest successors for one step more than the bound.
    Term cur = root;
    for (int i = 0; i <= options_.max_depth; ++i) {
      const StateInfo& si = info_.at(canonical_key(cur));
      if (!si.longest) break;
      verdict.trace.push_back(*si.longest);
      cur = si.longest->to;
    }
  } else {
    verdict.kind = ExplorationVerdict::Kind::AllTerminated;
    verdict.max_trace_len = root_height;
  }
  verdict.graph = std::move(graph_);
  return verdict;
}

}  // namespace

ExplorationVerdict bounded_explore(const Term& t, std::span<const Rule> rules, std::span<const DepPair> dps,
                                   const ExploreOptions& options) {
  Explorer e(rules, dps, options);
  return e.run(t);
}

std::string to_dot(const ExplorationGraph& g) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out = "digraph explored {\n";
  for (std::size_t i = 0; i < g.states.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + escape(g.states[i]) + "\"];\n";
  for (const auto& [from, to, label] : g.edges)
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + " [label=\"" + escape(label) + "\"];\n";
  return out + "}\n";
}

}  // namespace hodp
