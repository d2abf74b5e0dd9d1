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

#ifndef LPBANDIT_HARNESS_H_
#define LPBANDIT_HARNESS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpbandit/config.h"
#include "lpbandit/errors.h"
#include "lpbandit/instance.h"
#include "lpbandit/policy.h"
#include "lpbandit/proofcheck.h"

// Monte Carlo orchestration over (policy, d, n, p, c) cells, sign patterns
// and noise seeds.

namespace lpbandit {

enum class Verdict { kMet, kNotMet, kInconclusive };
const char* VerdictName(Verdict verdict);

// kMet iff mean >= bound - 2 sem. Inconclusive with fewer than two
// successful episodes or any failed episode.
Verdict DecideVerdict(double mean, double sem, double bound, size_t episodes,
                      size_t failures);

// Sample standard deviation / sqrt(count); 0 for fewer than two values.
double StandardError(const std::vector<double>& values);

struct GridCell {
  std::string policy;
  int d = 0;
  int64_t n = 0;
  double p = 0.0;
  double c = 0.0;
  double delta = 0.0;
  std::vector<uint64_t> sign_ids;
};

struct EpisodeRecord {
  size_t cell = 0;
  uint64_t sign_id = 0;
  int seed_index = 0;
  uint64_t noise_seed = 0;
  bool ok = true;
  ErrorCode error_code = ErrorCode::kInvalidInput;
  std::string error;
  double pseudo_regret = 0.0;
  std::optional<AuditReport> audit;
};

struct CellSummary {
  size_t episodes = 0;
  size_t failures = 0;
  double mean_regret = 0.0;
  double sem = 0.0;
  double lower_bound = 0.0;
  Verdict verdict = Verdict::kInconclusive;
  size_t audited = 0;
  size_t audit_passed = 0;
  // Violations per gating audit flag.
  std::vector<std::pair<std::string, size_t>> flag_violations;
};

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  // 95% Student-t interval on the slope; NaN with fewer than three points.
  double slope_ci_low = 0.0;
  double slope_ci_high = 0.0;
  size_t points = 0;
};

// Least squares of log(y) on log(x). Throws InvalidInput with fewer than
// `min_points` points or max(x)/min(x) < min_span, FitUndefined for
// nonpositive y.
LogLogFit FitLogLog(const std::vector<double>& x, const std::vector<double>& y,
                    size_t min_points = 4, double min_span = 16.0);

struct ScalingEntry {
  std::string policy;
  // "n": fixed d across horizons; "d": fixed n across dimensions.
  std::string axis;
  int d = 0;
  int64_t n = 0;
  double p = 0.0;
  double c = 0.0;
  std::vector<double> x;
  std::vector<double> mean_regret;
  LogLogFit fit;
  // The same routine applied to the analytic lower bound at the same x.
  LogLogFit bound_fit;
};

struct ExperimentReport {
  std::string run_id;
  ExperimentConfig config;
  std::vector<GridCell> cells;
  std::vector<CellSummary> summaries;
  // Sorted by (cell, sign id, seed index).
  std::vector<EpisodeRecord> episodes;
  std::vector<ScalingEntry> scaling;

  size_t failed_episodes() const;
  size_t audit_failures() const;
  bool all_bounds_met() const;
};

// Builds the policy for one episode; the default uses MakePolicy with the
// config's hyperparameters and ||theta||_2 as the LinUCB norm bound.
using PolicyFactory = std::function<std::unique_ptr<Policy>(
    const GridCell& cell, const HardInstance& instance)>;

// Cells in output order: policy name, then d, n, p, c ascending.
std::vector<GridCell> BuildGrid(const ExperimentConfig& config);

// Validates, runs every (cell, sign, seed) episode on `config.workers`
// threads, audits when enabled and aggregates. Episode failures are recorded
// per cell. Results are independent of the worker count.
ExperimentReport RunGrid(const ExperimentConfig& config,
                         const PolicyFactory& factory = {});

// Fits mean regret against n (groups with >= 4 horizons spanning >= 16x) and
// against d (groups with >= 2 dimensions).
std::vector<ScalingEntry> ComputeScaling(const ExperimentReport& report);

// Column order: run_id, policy, d, n, p, c, delta, sign_id, seed,
// pseudo_regret, surrogate_bound, audit_pass, min_eig_final, kl_max.
void EmitCsv(const ExperimentReport& report, std::ostream& out);
void EmitJson(const ExperimentReport& report, std::ostream& out);
// One JSON document per audited trajectory, one per line.
void EmitAudits(const ExperimentReport& report, std::ostream& out);
void EmitScaling(const ExperimentReport& report, std::ostream& out);

// A single audit as one line of JSON (no trailing newline).
std::string AuditJson(const AuditReport& audit);

// Writes results.csv, results.json, audits.jsonl (audit on) and scaling.json
// (when fits exist) into `dir`, creating it. Throws IOError.
void WriteReport(const ExperimentReport& report, const std::string& dir);

}  // namespace lpbandit

#endif  // LPBANDIT_HARNESS_H_
