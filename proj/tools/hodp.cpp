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

// hodp check FILE: termination analysis of a higher-order rewrite system.
// Exit codes: 0 analysis completed (any verdict), 2 input error,
// 3 resource limit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hodp/dependency_pairs.hpp"
#include "hodp/error.hpp"
#include "hodp/parser.hpp"
#include "hodp/pipeline.hpp"
#include "hodp/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency-pair termination analysis for higher-order rewrite systems"};
  app.require_subcommand(1);
  CLI::App* check = app.add_subcommand("check", "analyse a system file");

  std::string file;
  bool json = false;
  bool trace = false;
  std::string precedence;
  std::string dot_file;
  std::string internal = "all";
  hodp::PipelineOptions options;

  check->add_option("FILE", file, "system file")->required()->check(CLI::ExistingFile);
  check->add_flag("--json", json, "emit the JSON report");
  check->add_flag("--trace", trace, "include derivations and ordering witnesses in the text report");
  check->add_option("--precedence", precedence, "fixed precedence, e.g. \"f>g,g>h\"");
  check->add_option("--max-symbols", options.max_symbols, "precedence search budget")->capture_default_str();
  check->add_option("--ge-bound", options.ge_bound, "beta steps allowed when proving >=")->capture_default_str();
  check->add_flag("--disprove", options.disprove, "search for a nontermination witness");
  check->add_option("--explore-depth", options.explore_depth, "exploration depth bound")->capture_default_str();
  check->add_option("--explore-nodes", options.explore_nodes, "exploration node budget")->capture_default_str();
  check->add_option("--internal", internal, "internal chain steps")
      ->check(CLI::IsMember({"all", "rules-only"}))
      ->capture_default_str();
  check->add_option("--dot", dot_file, "write the exploration graph of the witness seed (Graphviz)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (check->count("--precedence")) options.precedence = precedence;
  options.internal = internal == "rules-only" ? hodp::InternalMode::RulesOnly : hodp::InternalMode::All;

  try {
    hodp::RewriteSystem system = hodp::parse_system_file(file);
    hodp::AnalysisReport report = hodp::run_pipeline(system, options);
    std::cout << hodp::render_report(report, json ? hodp::ReportFormat::Json : hodp::ReportFormat::Text, trace);

    if (!dot_file.empty() && report.witness) {
      std::vector<hodp::Term> seeds = hodp::seed_terms(system, options.seed_count);
      auto seed = std::find_if(seeds.begin(), seeds.end(),
                               [&](const hodp::Term& t) { return hodp::to_string(t) == report.witness->seed; });
      if (seed == seeds.end()) return 0;
      hodp::ExploreOptions eo{hodp::Relation::BetaRules, options.explore_depth, options.explore_nodes,
                              options.internal, true};
      std::vector<hodp::DepPair> dps = hodp::extract_dps(system.rules, system.signature);
      std::ofstream(dot_file) << hodp::to_dot(hodp::bounded_explore(*seed, system.rules, dps, eo).graph);
    }
    return 0;
  } catch (const hodp::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const hodp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
