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

#ifndef LPBANDIT_CHECKS_H_
#define LPBANDIT_CHECKS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lpbandit/geometry.h"

// Randomized sweeps behind the verify-lemmas and oracle-check commands.

namespace lpbandit {

struct BallSpec {
  int d = 0;
  double p = 0.0;
  double c = 0.0;
};

// {2, 4, 8} x {1.5, 2, 4} x {0.5, 1, 2}.
std::vector<BallSpec> DefaultLemmaConfigs();

struct LemmaCounterexample {
  Vector x;
  SignPattern signs;
  InequalityCheck check;
};

struct LemmaConfigResult {
  BallSpec spec;
  int64_t trials = 0;
  int64_t gap_violations = 0;
  int64_t norm_violations = 0;
  // Sampled points whose value beats the closed-form maximizer, and vertices
  // where the norm bound is not attained.
  int64_t dominance_violations = 0;
  int64_t vertex_equality_failures = 0;
  // Most negative normalized residual seen (positive means slack).
  double worst_gap_residual = 0.0;
  double worst_norm_residual = 0.0;
  std::optional<LemmaCounterexample> gap_example;
  std::optional<LemmaCounterexample> norm_example;

  int64_t violations() const {
    return gap_violations + norm_violations + dominance_violations +
           vertex_equality_failures;
  }
};

struct LemmaSweepReport {
  int64_t trials_per_config = 0;
  uint64_t master_seed = 0;
  std::vector<LemmaConfigResult> configs;

  int64_t total_violations() const;
};

// Draws `trials` feasible points per configuration from a mixture of
// interior, boundary, near-vertex and sparse boundary points, pairs each
// with a uniform sign pattern and checks the squared-gap inequality, the
// l2 norm bound and linear dominance of ArgmaxLinear.
LemmaSweepReport VerifyLemmas(int64_t trials, uint64_t master_seed,
                              const std::vector<BallSpec>& configs =
                                  DefaultLemmaConfigs());

struct OracleCase {
  BallSpec spec;
  Vector theta;
  double closed_form = 0.0;
  double lagrange_form = 0.0;
  double ascent = 0.0;
  // NaN when d > 3.
  double grid = 0.0;
  double worst_relative_error = 0.0;
};

struct OracleReport {
  double tolerance = 0.0;
  std::vector<OracleCase> cases;

  double worst_relative_error() const;
  int64_t failures() const;
};

inline constexpr double kOracleTolerance = 1e-6;
inline constexpr int kOracleAscentStarts = 64;
inline constexpr int kOracleGridPoints = 100000;

// d uniform in 1..6, p uniform in [1.1, 20], c uniform in [0.1, 10], theta
// standard Gaussian. Compares ArgmaxLinear's value against multi-start
// projected ascent and, for d <= 3, the refined boundary grid.
OracleReport OracleCheck(int instances, uint64_t master_seed,
                         double tolerance = kOracleTolerance);

}  // namespace lpbandit

#endif  // LPBANDIT_CHECKS_H_
