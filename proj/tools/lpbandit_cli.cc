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


// lpbandit command-line tool.
//
//   lpbandit run --config FILE [overrides...]
//   lpbandit scaling --config FILE --out DIR
//   lpbandit verify-lemmas --trials T --master-seed M
//   lpbandit oracle-check --instances I --master-seed M
//   lpbandit audit --trajectory FILE
//
// Exit status: 0 success, 1 verdict or audit failure, 2 configuration error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "lpbandit/checks.h"
#include "lpbandit/config.h"
#include "lpbandit/env.h"
#include "lpbandit/errors.h"
#include "lpbandit/harness.h"
#include "lpbandit/proofcheck.h"

namespace {

using namespace lpbandit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kFitUndefined:
      return kExitNumerical;
    case ErrorCode::kInfeasibleAction:
      return kExitFailure;
    default:
      return kExitConfig;
  }
}

struct RunArgs {
  std::string config_path;
  // Command-line overrides keyed like the config file.
  std::map<std::string, std::string> overrides;
};

void AddOverride(CLI::App* cmd, RunArgs& args, const std::string& flag,
                 const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&args, key](const std::string& v) { args.overrides[key] = v; },
      help);
}

ExperimentConfig LoadConfig(const RunArgs& args) {
  KeyValues values;
  if (!args.config_path.empty()) values = ReadKeyValueFile(args.config_path);
  for (const auto& [key, value] : args.overrides) values[key] = value;
  return ConfigFromKeyValues(values);
}

void PrintSummary(const ExperimentReport& report) {
  std::printf("run %s: %zu cells, %zu episodes\n", report.run_id.c_str(),
              report.cells.size(), report.episodes.size());
  std::printf("%-8s %3s %7s %6s %6s %12s %10s %10s %-12s %s\n", "policy", "d",
              "n", "p", "c", "mean", "sem", "bound", "verdict", "audit");
  for (size_t k = 0; k < report.cells.size(); ++k) {
    const GridCell& cell = report.cells[k];
    const CellSummary& s = report.summaries[k];
    std::printf("%-8s %3d %7lld %6g %6g %12.6g %10.4g %10.6g %-12s %zu/%zu\n",
                cell.policy.c_str(), cell.d, static_cast<long long>(cell.n),
                cell.p, cell.c, s.mean_regret, s.sem, s.lower_bound,
                VerdictName(s.verdict), s.audit_passed, s.audited);
  }
  for (const EpisodeRecord& r : report.episodes) {
    if (!r.ok) {
      std::fprintf(stderr, "episode cell=%zu sign=%llu seed=%d failed: %s\n",
                   r.cell, static_cast<unsigned long long>(r.sign_id),
                   r.seed_index, r.error.c_str());
    }
  }
}

void PrintScaling(const ExperimentReport& report) {
  for (const ScalingEntry& e : report.scaling) {
    std::printf(
        "scaling %s vs %s (p=%g c=%g): slope %.6f [%.4f, %.4f], bound slope "
        "%.12f\n",
        e.policy.c_str(), e.axis.c_str(), e.p, e.c, e.fit.slope,
        e.fit.slope_ci_low, e.fit.slope_ci_high, e.bound_fit.slope);
  }
}

bool AnyNumericalFailure(const ExperimentReport& report) {
  for (const EpisodeRecord& r : report.episodes) {
    if (!r.ok && r.error_code == ErrorCode::kNumericalFailure) return true;
  }
  return false;
}

int FinishGrid(const ExperimentReport& report, bool verdict_gates) {
  if (!report.config.out_dir.empty()) {
    WriteReport(report, report.config.out_dir);
  }
  PrintSummary(report);
  PrintScaling(report);
  if (AnyNumericalFailure(report)) return kExitNumerical;
  if (report.failed_episodes() > 0 || report.audit_failures() > 0) {
    return kExitFailure;
  }
  if (verdict_gates && !report.all_bounds_met()) return kExitFailure;
  return kExitOk;
}

int CommandRun(const RunArgs& args) {
  const ExperimentConfig config = LoadConfig(args);
  return FinishGrid(RunGrid(config), /*verdict_gates=*/true);
}

int CommandScaling(const RunArgs& args) {
  const ExperimentConfig config = LoadConfig(args);
  const ExperimentReport report = RunGrid(config);
  if (report.scaling.empty()) {
    std::fprintf(stderr,
                 "no scaling fit: need >= 4 horizons spanning 16x or >= 2 "
                 "dimensions\n");
    FinishGrid(report, false);
    return kExitConfig;
  }
  return FinishGrid(report, /*verdict_gates=*/false);
}

int CommandVerifyLemmas(int64_t trials, uint64_t master_seed) {
  const LemmaSweepReport report = VerifyLemmas(trials, master_seed);
  std::printf("%3s %5s %5s %8s %9s %9s %9s %9s %13s %13s\n", "d", "p", "c",
              "trials", "gap_viol", "norm_viol", "dom_viol", "vtx_fail",
              "worst_gap", "worst_norm");
  for (const LemmaConfigResult& r : report.configs) {
    std::printf("%3d %5g %5g %8lld %9lld %9lld %9lld %9lld %13.4e %13.4e\n",
                r.spec.d, r.spec.p, r.spec.c, static_cast<long long>(r.trials),
                static_cast<long long>(r.gap_violations),
                static_cast<long long>(r.norm_violations),
                static_cast<long long>(r.dominance_violations),
                static_cast<long long>(r.vertex_equality_failures),
                r.worst_gap_residual, r.worst_norm_residual);
  }
  const int64_t total = report.total_violations();
  std::printf("total violations: %lld\n", static_cast<long long>(total));
  return total == 0 ? kExitOk : kExitFailure;
}

int CommandOracleCheck(int instances, uint64_t master_seed) {
  const OracleReport report = OracleCheck(instances, master_seed);
  for (size_t k = 0; k < report.cases.size(); ++k) {
    const OracleCase& c = report.cases[k];
    std::printf(
        "%4zu d=%d p=%-9.5g c=%-8.5g closed=%.15g ascent=%.15g grid=%.15g "
        "relerr=%.3e\n",
        k, c.spec.d, c.spec.p, c.spec.c, c.closed_form, c.ascent, c.grid,
        c.worst_relative_error);
  }
  std::printf("worst relative error %.3e (tolerance %.0e), failures %lld\n",
              report.worst_relative_error(), report.tolerance,
              static_cast<long long>(report.failures()));
  return report.failures() == 0 ? kExitOk : kExitFailure;
}

int CommandAudit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  const Trajectory traj = ReadTrajectory(in);
  const AuditReport audit = Audit(traj);
  std::printf("%s\n", AuditJson(audit).c_str());
  return audit.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear bandit lower-bound laboratory on l_p balls"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo grid");
  run->add_option("--config", run_args.config_path, "key=value config file")
      ->check(CLI::ExistingFile);
  AddOverride(run, run_args, "--policy", "policy", "uniform|etc|linucb list");
  AddOverride(run, run_args, "--d", "d", "dimensions");
  AddOverride(run, run_args, "--n", "n", "horizons");
  AddOverride(run, run_args, "--p", "p", "exponents");
  AddOverride(run, run_args, "--c", "c", "radii");
  AddOverride(run, run_args, "--signs", "signs", "all | sample:K");
  AddOverride(run, run_args, "--seeds", "seeds", "noise seeds per pattern");
  AddOverride(run, run_args, "--master-seed", "master_seed", "master seed");
  AddOverride(run, run_args, "--out", "out", "output directory");
  AddOverride(run, run_args, "--audit", "audit", "on|off");
  AddOverride(run, run_args, "--workers", "workers", "worker threads");

  RunArgs scaling_args;
  CLI::App* scaling =
      app.add_subcommand("scaling", "Run a multi-horizon grid and fit slopes");
  scaling->add_option("--config", scaling_args.config_path, "config file")
      ->required()
      ->check(CLI::ExistingFile);
  AddOverride(scaling, scaling_args, "--out", "out", "output directory");
  AddOverride(scaling, scaling_args, "--workers", "workers", "worker threads");

  int64_t trials = 10000;
  uint64_t lemma_seed = 0;
  CLI::App* lemmas = app.add_subcommand(
      "verify-lemmas", "Random sweep of the geometric inequalities");
  lemmas->add_option("--trials", trials, "points per configuration")
      ->capture_default_str();
  lemmas->add_option("--master-seed", lemma_seed, "master seed")
      ->capture_default_str();

  int instances = 200;
  uint64_t oracle_seed = 0;
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Closed-form argmax against brute-force maximizers");
  oracle->add_option("--instances", instances, "random instances")
      ->capture_default_str();
  oracle->add_option("--master-seed", oracle_seed, "master seed")
      ->capture_default_str();

  std::string trajectory_path;
  CLI::App* audit = app.add_subcommand("audit", "Audit a saved trajectory");
  audit->add_option("--trajectory", trajectory_path, "trajectory file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return CommandRun(run_args);
    if (*scaling) return CommandScaling(scaling_args);
    if (*lemmas) return CommandVerifyLemmas(trials, lemma_seed);
    if (*oracle) return CommandOracleCheck(instances, oracle_seed);
    if (*audit) return CommandAudit(trajectory_path);
  } catch (const InadmissibleRegime& e) {
    std::fprintf(stderr, "inadmissible regime: %s\n", e.what());
    return kExitConfig;
  } catch (const Error& e) {
    std::fprintf(stderr, "%s: %s\n", ErrorCodeName(e.code()), e.what());
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitConfig;
}
