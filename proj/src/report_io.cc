// Copyright 2026 The lpbandit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "lpbandit/harness.h"

namespace lpbandit {
namespace {

using Json = nlohmann::ordered_json;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// NaN and infinities become null.
Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json CheckJson(const InequalityCheck& check) {
  return Json{{"holds", check.holds},
              {"lhs", Number(check.lhs)},
              {"rhs", Number(check.rhs)},
              {"residual", Number(check.residual)}};
}

Json AuditToJson(const AuditReport& audit) {
  Json flags = Json::object();
  for (const AuditFlag& f : audit.flags) {
    Json entry = CheckJson(f.check);
    entry["gating"] = f.gating;
    flags[f.name] = entry;
  }
  Json pinsker = Json::array();
  for (const PinskerTerms& t : audit.pinsker) {
    pinsker.push_back(Json{{"deviation", Number(t.deviation)},
                           {"literal", Number(t.literal)}});
  }
  return Json{
      {"passed", audit.passed()},
      {"d", audit.d},
      {"n", audit.n},
      {"pseudo_regret", Number(audit.pseudo_regret)},
      {"surrogate", Number(audit.surrogate)},
      {"u_upper_bound", Number(audit.u_upper_bound)},
      {"stopping_times", audit.stopping_times},
      {"u_plus", audit.u_plus},
      {"u_minus", audit.u_minus},
      {"truncated_square_sums", audit.truncated_square_sums},
      {"kl", audit.kl_values},
      {"pinsker", pinsker},
      {"pinsker_cap", Number(audit.pinsker_cap)},
      {"min_eig", Json{{"rounds", audit.eigen.rounds},
                       {"values", audit.eigen.min_eigenvalues},
                       {"max_values", audit.eigen.max_eigenvalues}}},
      {"flags", flags}};
}

Json FitJson(const LogLogFit& fit) {
  return Json{{"slope", Number(fit.slope)},
              {"intercept", Number(fit.intercept)},
              {"slope_ci", Json::array({Number(fit.slope_ci_low),
                                        Number(fit.slope_ci_high)})},
              {"points", fit.points}};
}

Json ScalingJson(const ExperimentReport& report) {
  Json entries = Json::array();
  for (const ScalingEntry& e : report.scaling) {
    Json entry{{"policy", e.policy}, {"axis", e.axis}};
    if (e.axis == "n") {
      entry["d"] = e.d;
    } else {
      entry["n"] = e.n;
    }
    entry["p"] = e.p;
    entry["c"] = e.c;
    entry["x"] = e.x;
    entry["mean_regret"] = e.mean_regret;
    entry["fit"] = FitJson(e.fit);
    entry["bound_fit"] = FitJson(e.bound_fit);
    entries.push_back(entry);
  }
  return entries;
}

void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path.string());
  writer(out);
  out.flush();
  if (!out) throw IOError("write failed for " + path.string());
}

}  // namespace

std::string AuditJson(const AuditReport& audit) {
  return AuditToJson(audit).dump();
}

void EmitCsv(const ExperimentReport& report, std::ostream& out) {
  out << "run_id,policy,d,n,p,c,delta,sign_id,seed,pseudo_regret,"
         "surrogate_bound,audit_pass,min_eig_final,kl_max\n";
  for (const EpisodeRecord& r : report.episodes) {
    const GridCell& cell = report.cells[r.cell];
    out << report.run_id << ',' << cell.policy << ',' << cell.d << ','
        << cell.n << ',' << Num(cell.p) << ',' << Num(cell.c) << ','
        << Num(cell.delta) << ',' << r.sign_id << ',' << r.seed_index << ',';
    if (!r.ok) {
      out << ",,error,,\n";
      continue;
    }
    out << Num(r.pseudo_regret) << ',';
    if (r.audit) {
      out << Num(r.audit->surrogate) << ','
          << (r.audit->passed() ? "true" : "false") << ','
          << Num(r.audit->min_eig_final()) << ',' << Num(r.audit->kl_max())
          << '\n';
    } else {
      out << ",,,\n";
    }
  }
}

void EmitJson(const ExperimentReport& report, std::ostream& out) {
  Json cells = Json::array();
  size_t begin = 0;
  for (size_t c = 0; c < report.cells.size(); ++c) {
    const GridCell& cell = report.cells[c];
    const CellSummary& s = report.summaries[c];
    Json violations = Json::object();
    for (const auto& [name, count] : s.flag_violations) violations[name] = count;
    Json episodes = Json::array();
    for (; begin < report.episodes.size() && report.episodes[begin].cell == c;
         ++begin) {
      const EpisodeRecord& r = report.episodes[begin];
      Json e{{"sign_id", r.sign_id},
             {"seed", r.seed_index},
             {"noise_seed", r.noise_seed}};
      if (!r.ok) {
        e["error"] = Json{{"code", ErrorCodeName(r.error_code)},
                          {"message", r.error}};
      } else {
        e["pseudo_regret"] = Number(r.pseudo_regret);
        if (r.audit) {
          e["surrogate_bound"] = Number(r.audit->surrogate);
          e["audit_pass"] = r.audit->passed();
          e["min_eig_final"] = Number(r.audit->min_eig_final());
          e["kl_max"] = Number(r.audit->kl_max());
        }
      }
      episodes.push_back(e);
    }
    cells.push_back(Json{
        {"policy", cell.policy},
        {"d", cell.d},
        {"n", cell.n},
        {"p", cell.p},
        {"c", cell.c},
        {"delta", Number(cell.delta)},
        {"summary",
         Json{{"episodes", s.episodes},
              {"failures", s.failures},
              {"mean_pseudo_regret", Number(s.mean_regret)},
              {"sem", Number(s.sem)},
              {"lower_bound", Number(s.lower_bound)},
              {"verdict", VerdictName(s.verdict)},
              {"audited", s.audited},
              {"audit_passed", s.audit_passed},
              {"flag_violations", violations}}},
        {"episodes", episodes}});
  }
  const Json doc{{"run_id", report.run_id},
                 {"master_seed", report.config.master_seed},
                 {"config", CanonicalConfigString(report.config)},
                 {"cells", cells},
                 {"scaling", ScalingJson(report)}};
  out << doc.dump(2) << '\n';
}

void EmitAudits(const ExperimentReport& report, std::ostream& out) {
  for (const EpisodeRecord& r : report.episodes) {
    if (!r.ok || !r.audit) continue;
    const GridCell& cell = report.cells[r.cell];
    Json doc{{"run_id", report.run_id}, {"policy", cell.policy},
             {"p", cell.p},             {"c", cell.c},
             {"delta", cell.delta},     {"sign_id", r.sign_id},
             {"seed", r.seed_index},    {"noise_seed", r.noise_seed}};
    doc.update(AuditToJson(*r.audit));
    out << doc.dump() << '\n';
  }
}

void EmitScaling(const ExperimentReport& report, std::ostream& out) {
  out << Json{{"run_id", report.run_id}, {"fits", ScalingJson(report)}}.dump(2)
      << '\n';
}

void WriteReport(const ExperimentReport& report, const std::string& dir) {
  const std::filesystem::path root(dir);
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec) throw IOError("cannot create " + dir + ": " + ec.message());
  WriteFile(root / "results.csv",
            [&](std::ostream& out) { EmitCsv(report, out); });
  WriteFile(root / "results.json",
            [&](std::ostream& out) { EmitJson(report, out); });
  if (report.config.audit) {
    WriteFile(root / "audits.jsonl",
              [&](std::ostream& out) { EmitAudits(report, out); });
  }
  if (!report.scaling.empty()) {
    WriteFile(root / "scaling.json",
              [&](std::ostream& out) { EmitScaling(report, out); });
  }
}

}  // namespace lpbandit
