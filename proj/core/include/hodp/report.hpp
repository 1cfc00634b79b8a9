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

#ifndef HODP_REPORT_HPP
#define HODP_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hodp {

enum class Verdict { Yes, No, Maybe };

std::string_view to_string(Verdict v);

// A rendered derivation: PCC derivations and ordering witnesses both end
// up as trees of labelled lines.
struct TraceNode {
  std::string label;
  std::string text;
  std::vector<TraceNode> children;

  friend bool operator==(const TraceNode&, const TraceNode&) = default;
};

struct VariableEntry {
  std::string name;
  std::string type;
  bool derivable = false;
  std::string summary;  // "arg 2; acc 1", empty when underivable
  std::optional<TraceNode> derivation;

  friend bool operator==(const VariableEntry&, const VariableEntry&) = default;
};

struct RuleEntry {
  int id = 0;
  std::string lhs;
  std::string rhs;
  bool admissible = true;
  std::vector<VariableEntry> variables;

  friend bool operator==(const RuleEntry&, const RuleEntry&) = default;
};

struct StarEntry {
  bool ok = true;
  std::vector<std::string> free_bound_vars;
  // {got, want}
  std::optional<std::pair<std::string, std::string>> type_mismatch;

  friend bool operator==(const StarEntry&, const StarEntry&) = default;
};

struct DpEntry {
  int id = 0;
  int rule = 0;
  std::string position;
  std::string lhs;
  std::string rhs;
  int level = 0;
  StarEntry star;

  friend bool operator==(const DpEntry&, const DpEntry&) = default;
};

struct WitnessEntry {
  std::string kind;  // "rule" or "dp"
  int id = 0;
  std::string relation;
  TraceNode trace;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct CertificateEntry {
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::string> statuses;
  std::vector<WitnessEntry> witnesses;

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct NonterminationWitness {
  std::string relation;
  std::string seed;
  std::vector<std::string> steps;
  // The →β ∪ →ch explorer found a cycle from the same seed.
  bool chain_cycle = false;
  std::vector<std::string> chain_steps;

  friend bool operator==(const NonterminationWitness&, const NonterminationWitness&) = default;
};

struct SortEntry {
  std::string name;
  bool basic = false;

  friend bool operator==(const SortEntry&, const SortEntry&) = default;
};

struct AnalysisReport {
  Verdict verdict = Verdict::Maybe;
  // First failing stage for MAYBE: "admissibility", "star-condition" or
  // "reduction-pair"; empty otherwise.
  std::string stage;
  std::vector<std::string> notes;
  std::vector<SortEntry> sorts;
  std::vector<std::string> defined;
  std::vector<RuleEntry> rules;
  std::vector<DpEntry> dps;
  std::optional<CertificateEntry> certificate;
  std::vector<std::string> failures;
  std::optional<NonterminationWitness> witness;
  double timing_ms = 0.0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

enum class ReportFormat { Text, Json };

// Text starts with the verdict word on its own line. JSON is one object
// with the fields verdict, stage, notes, sorts, defined, rules, dps,
// certificate, failures, witness and timing. `traces` adds derivation and
// witness trees to the text form (JSON always carries them).
std::string render_report(const AnalysisReport& report, ReportFormat format, bool traces = false);

// Inverse of the JSON rendering. Throws Error on malformed input.
AnalysisReport parse_report_json(std::string_view json);

}  // namespace hodp

#endif  // HODP_REPORT_HPP
