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

#include "hodp/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hodp/error.hpp"

namespace hodp {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::Maybe:
      return "MAYBE";
  }
  return "MAYBE";
}

namespace {

json trace_json(const TraceNode& t) {
  json children = json::array();
  for (const auto& c : t.children) children.push_back(trace_json(c));
  return {{"label", t.label}, {"text", t.text}, {"children", children}};
}

TraceNode trace_from(const json& j) {
  TraceNode t{j.at("label").get<std::string>(), j.at("text").get<std::string>(), {}};
  for (const auto& c : j.at("children")) t.children.push_back(trace_from(c));
  return t;
}

template <typename T>
json optional_json(const std::optional<T>& v, json (*f)(const T&)) {
  return v ? f(*v) : json(nullptr);
}

json to_json(const AnalysisReport& r) {
  json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["stage"] = r.stage.empty() ? json(nullptr) : json(r.stage);
  j["notes"] = r.notes;
  j["defined"] = r.defined;

  json sorts = json::array();
  for (const auto& s : r.sorts) sorts.push_back({{"name", s.name}, {"basic", s.basic}});
  j["sorts"] = sorts;

  json rules = json::array();
  for (const auto& rule : r.rules) {
    json vars = json::array();
    for (const auto& v : rule.variables) {
      vars.push_back({{"name", v.name},
                      {"type", v.type},
                      {"derivable", v.derivable},
                      {"summary", v.summary},
                      {"derivation", optional_json(v.derivation, &trace_json)}});
    }
    rules.push_back({{"id", rule.id},
                     {"lhs", rule.lhs},
                     {"rhs", rule.rhs},
                     {"admissible", rule.admissible},
                     {"variables", vars}});
  }
  j["rules"] = rules;

  json dps = json::array();
  for (const auto& d : r.dps) {
    json mismatch = nullptr;
    if (d.star.type_mismatch) mismatch = {{"got", d.star.type_mismatch->first}, {"want", d.star.type_mismatch->second}};
    dps.push_back({{"id", d.id},
                   {"rule", d.rule},
                   {"position", d.position},
                   {"lhs", d.lhs},
                   {"rhs", d.rhs},
                   {"level", d.level},
                   {"star", {{"ok", d.star.ok}, {"free_bound_vars", d.star.free_bound_vars}, {"type_mismatch", mismatch}}}});
  }
  j["dps"] = dps;

  if (r.certificate) {
    json edges = json::array();
    for (const auto& [f, g] : r.certificate->edges) edges.push_back({f, g});
    json witnesses = json::array();
    for (const auto& w : r.certificate->witnesses)
      witnesses.push_back({{"kind", w.kind}, {"id", w.id}, {"relation", w.relation}, {"trace", trace_json(w.trace)}});
    j["certificate"] = {{"edges", edges}, {"statuses", r.certificate->statuses}, {"witnesses", witnesses}};
  } else {
    j["certificate"] = nullptr;
  }
  j["failures"] = r.failures;

  if (r.witness) {
    j["witness"] = {{"relation", r.witness->relation},
                    {"seed", r.witness->seed},
                    {"steps", r.witness->steps},
                    {"chain_cycle", r.witness->chain_cycle},
                    {"chain_steps", r.witness->chain_steps}};
  } else {
    j["witness"] = nullptr;
  }
  j["timing"] = {{"total_ms", r.timing_ms}};
  return j;
}

void text_trace(std::ostringstream& out, const TraceNode& t, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << "[" << t.label << "] " << t.text << "\n";
  for (const auto& c : t.children) text_trace(out, c, indent + 1);
}

std::string render_text(const AnalysisReport& r, bool traces) {
  std::ostringstream out;
  out << to_string(r.verdict) << "\n";
  if (!r.stage.empty()) out << "stage: " << r.stage << "\n";

  out << "defined:";
  for (const auto& d : r.defined) out << " " << d;
  out << "\nsorts:";
  for (const auto& s : r.sorts) out << " " << s.name << (s.basic ? " (basic)" : "");
  out << "\n";

  out << "rules:\n";
  for (const auto& rule : r.rules) {
    out << "  [" << rule.id << "] " << rule.lhs << " -> " << rule.rhs << ": "
        << (rule.admissible ? "admissible" : "NOT admissible") << "\n";
    for (const auto& v : rule.variables) {
      out << "      " << v.name << " : " << v.type << "  " << (v.derivable ? v.summary : "underivable") << "\n";
      if (traces && v.derivation) text_trace(out, *v.derivation, 4);
    }
  }

  out << "dependency pairs:\n";
  for (const auto& d : r.dps) {
    out << "  [" << d.id << "] " << d.lhs << " -> " << d.rhs << "  (rule " << d.rule << " @ " << d.position
        << ", level " << d.level << "): ";
    if (d.star.ok) {
      out << "star PASS\n";
      continue;
    }
    out << "star FAIL";
    if (!d.star.free_bound_vars.empty()) {
      out << "; free bound variables:";
      for (const auto& v : d.star.free_bound_vars) out << " " << v;
    }
    if (d.star.type_mismatch)
      out << "; type mismatch: got " << d.star.type_mismatch->first << ", want " << d.star.type_mismatch->second;
    out << "\n";
  }

  if (r.certificate) {
    out << "certificate:\n  precedence:";
    if (r.certificate->edges.empty()) out << " (empty)";
    for (const auto& [f, g] : r.certificate->edges) out << " " << f << ">" << g;
    out << "\n  statuses:";
    for (const auto& [f, s] : r.certificate->statuses) out << " " << f << "=" << s;
    out << "\n";
    if (traces) {
      for (const auto& w : r.certificate->witnesses) {
        out << "  " << w.kind << " " << w.id << " (" << w.relation << "):\n";
        text_trace(out, w.trace, 2);
      }
    }
  }
  if (!r.failures.empty()) {
    out << "failures:\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  if (r.witness) {
    out << "nontermination witness (" << r.witness->relation << ") from " << r.witness->seed << ":\n";
    for (const auto& s : r.witness->steps) out << "  " << s << "\n";
    out << "  chain relation cycle: " << (r.witness->chain_cycle ? "yes" : "no") << "\n";
    if (traces)
      for (const auto& s : r.witness->chain_steps) out << "    " << s << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "time: " << std::fixed << std::setprecision(3) << r.timing_ms << " ms\n";
  return out.str();
}

}  // namespace

std::string render_report(const AnalysisReport& report, ReportFormat format, bool traces) {
  if (format == ReportFormat::Json) return to_json(report).dump(2) + "\n";
  return render_text(report, traces);
}

AnalysisReport parse_report_json(std::string_view text) {
  try {
    json j = json::parse(text);
    AnalysisReport r;
    std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "YES" ? Verdict::Yes : v == "NO" ? Verdict::No : Verdict::Maybe;
    if (!j.at("stage").is_null()) r.stage = j.at("stage").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.defined = j.at("defined").get<std::vector<std::string>>();
    for (const auto& s : j.at("sorts")) r.sorts.push_back({s.at("name").get<std::string>(), s.at("basic").get<bool>()});
    for (const auto& rj : j.at("rules")) {
      RuleEntry rule{rj.at("id").get<int>(), rj.at("lhs").get<std::string>(), rj.at("rhs").get<std::string>(),
                     rj.at("admissible").get<bool>(), {}};
      for (const auto& vj : rj.at("variables")) {
        VariableEntry v{vj.at("name").get<std::string>(), vj.at("type").get<std::string>(),
                        vj.at("derivable").get<bool>(), vj.at("summary").get<std::string>(), std::nullopt};
        if (!vj.at("derivation").is_null()) v.derivation = trace_from(vj.at("derivation"));
        rule.variables.push_back(std::move(v));
      }
      r.rules.push_back(std::move(rule));
    }
    for (const auto& dj : j.at("dps")) {
      DpEntry d{dj.at("id").get<int>(), dj.at("rule").get<int>(), dj.at("position").get<std::string>(),
                dj.at("lhs").get<std::string>(), dj.at("rhs").get<std::string>(), dj.at("level").get<int>(), {}};
      const json& sj = dj.at("star");
      d.star.ok = sj.at("ok").get<bool>();
      d.star.free_bound_vars = sj.at("free_bound_vars").get<std::vector<std::string>>();
      if (!sj.at("type_mismatch").is_null())
        d.star.type_mismatch = std::make_pair(sj.at("type_mismatch").at("got").get<std::string>(),
                                              sj.at("type_mismatch").at("want").get<std::string>());
      r.dps.push_back(std::move(d));
    }
    if (!j.at("certificate").is_null()) {
      const json& cj = j.at("certificate");
      CertificateEntry c;
      for (const auto& e : cj.at("edges")) c.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
      c.statuses = cj.at("statuses").get<std::map<std::string, std::string>>();
      for (const auto& wj : cj.at("witnesses"))
        c.witnesses.push_back({wj.at("kind").get<std::string>(), wj.at("id").get<int>(),
                               wj.at("relation").get<std::string>(), trace_from(wj.at("trace"))});
      r.certificate = std::move(c);
    }
    r.failures = j.at("failures").get<std::vector<std::string>>();
    if (!j.at("witness").is_null()) {
      const json& wj = j.at("witness");
      r.witness = NonterminationWitness{wj.at("relation").get<std::string>(), wj.at("seed").get<std::string>(),
                                        wj.at("steps").get<std::vector<std::string>>(), wj.at("chain_cycle").get<bool>(),
                                        wj.at("chain_steps").get<std::vector<std::string>>()};
    }
    r.timing_ms = j.at("timing").at("total_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace hodp
