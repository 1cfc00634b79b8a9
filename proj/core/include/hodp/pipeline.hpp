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

#ifndef HODP_PIPELINE_HPP
#define HODP_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hodp/report.hpp"
#include "hodp/rewrite.hpp"
#include "hodp/signature.hpp"

namespace hodp {

// Forces a stage to report failure regardless of its outcome.
struct FaultInjection {
  bool admissibility = false;
  bool star = false;
  bool reduction_pair = false;
};

struct PipelineOptions {
  // Fixed precedence ("f>g,g>h"); only statuses are searched when set.
  std::optional<std::string> precedence;
  std::size_t max_symbols = 8;
  int ge_bound = 8;
  bool disprove = false;
  int explore_depth = 200;
  std::size_t explore_nodes = 100000;
  InternalMode internal = InternalMode::All;
  std::size_t seed_count = 50;
  FaultInjection faults;
};

// Stages, in the order used to name the first failure: star condition,
// admissibility, reduction pair. Every stage runs even after another one
// fails. YES needs all three; NO needs a
// cycle found by --disprove. Throws ResourceLimit from the precedence
// search or exploration, and Error for a malformed --precedence.
AnalysisReport run_pipeline(const RewriteSystem& system, const PipelineOptions& options = {});

// Instances of rule left-hand sides whose variables are replaced by small
// ground terms built from constructors (at most `depth` layers). Variables of arrow
// type get abstractions whose bodies are built the same way from the
// constructors and the bound variables. Variables of a type without such
// inhabitants stay as they are. Rules take turns; no duplicates
// modulo α; at most `count` terms.
std::vector<Term> seed_terms(const RewriteSystem& system, std::size_t count, int depth = 3);

}  // namespace hodp

#endif  // HODP_PIPELINE_HPP
