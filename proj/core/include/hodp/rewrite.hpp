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

#ifndef HODP_REWRITE_HPP
#define HODP_REWRITE_HPP

#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hodp/dependency_pairs.hpp"
#include "hodp/signature.hpp"
#include "hodp/substitution.hpp"
#include "hodp/term.hpp"

namespace hodp {

enum class StepKind { Beta, Rule, Dp };

struct Step {
  StepKind kind = StepKind::Beta;
  int id = 0;  // rule or dependency pair id; 0 for β
  Position position;
  Term from;
  Term to;
  Substitution subst;
};

// "beta", "rule2", "dp1"
std::string step_label(const Step& s);
// "<kind>@<position>: <from> => <to>"
std::string format_step(const Step& s);

// Which steps count as internal (below the root) in a chain.
enum class InternalMode { All, RulesOnly };

// All one-step →β ∪ →R reducts, ordered by position, then β before rules,
// then rule id.
std::vector<Step> rewrite_steps(const Term& t, std::span<const Rule> rules);
// rewrite_steps without root steps; RulesOnly also drops β steps.
std::vector<Step> internal_steps(const Term& t, std::span<const Rule> rules,
                                 InternalMode mode = InternalMode::All);
// One root step per dependency pair whose lhs matches `t`.
std::vector<Step> dp_top_steps(const Term& t, std::span<const DepPair> dps);
// Every sequence of at most `k` internal steps followed by one root
// dependency-pair step.
std::vector<std::vector<Step>> chain_steps(const Term& t, std::span<const Rule> rules,
                                           std::span<const DepPair> dps, int k,
                                           InternalMode mode = InternalMode::All);

// Recomputes the step from `from` and checks it lands on `to` (modulo α).
bool replay_step(const Step& s, std::span<const Rule> rules, std::span<const DepPair> dps);

// BetaRules explores →β ∪ →R. BetaChain explores →β ∪ →i ∪ →dpε, whose
// infinite paths include every infinite →β ∪ →ch sequence.
enum class Relation { BetaRules, BetaChain };

struct ExploreOptions {
  Relation relation = Relation::BetaRules;
  int max_depth = 200;
  std::size_t max_nodes = 100000;
  InternalMode internal = InternalMode::All;
  bool record_graph = false;
};

struct ExplorationGraph {
  std::vector<std::string> states;
  // from, to, step label
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
};

struct ExplorationVerdict {
  enum class Kind { AllTerminated, BoundExceeded, CycleFound };
  Kind kind = Kind::AllTerminated;
  // Length of the longest trace when AllTerminated.
  int max_trace_len = 0;
  // CycleFound: a path whose last state repeats an earlier one.
  // BoundExceeded: a path one step longer than the depth bound.
  std::vector<Step> trace;
  std::size_t nodes = 0;
  ExplorationGraph graph;
};

std::string_view to_string(ExplorationVerdict::Kind k);

// Depth-first exploration memoized on α-classes. Deterministic: the first
// cycle in step order wins. Throws ResourceLimit once more than
// `max_nodes` distinct states have been seen.
ExplorationVerdict bounded_explore(const Term& t, std::span<const Rule> rules,
                                   std::span<const DepPair> dps, const ExploreOptions& options);

std::string to_dot(const ExplorationGraph& g);

}  // namespace hodp

#endif  // HODP_REWRITE_HPP
