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

#ifndef LPBANDIT_PROOFCHECK_H_
#define LPBANDIT_PROOFCHECK_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpbandit/env.h"
#include "lpbandit/geometry.h"
#include "lpbandit/instance.h"

// Trajectory auditor for the sign-hypercube lower-bound argument.
//
// Notation: a = c / d^{1/p} is the vertex coordinate and the truncation level
// for coordinate i is n a^2 = n c^2 / d^{2/p}. Round indices are 1-based in
// every returned quantity (tau_i in [1, n]).
//
// The auditor evaluates the per-trajectory links of the argument:
//   surrogate  = (delta / (2a)) sum_i U_i(sign(theta_i))  <=  pseudo-regret
//   U_i(sigma) = sum_{t <= tau_i} (a - x_ti sigma)^2      <=  4 n a^2 + 2 c^2
//   sum_{t <= tau_i} x_ti^2                               <=  n a^2 + c^2
//   lambda_min(sum_{s <= t} x_s x_s^T)                        nondecreasing
// and reports the information-side quantities (KL to the coordinate-flipped
// neighbour and the Pinsker deviation term) as diagnostics.

namespace lpbandit {

// First round t with sum_{s<=t} x_si^2 >= n a^2, or n if the level is never
// reached.
int64_t StoppingTime(const Trajectory& trajectory, int i);

// sum_{t<=tau_i} (a - x_ti sigma)^2 for sigma in {-1, +1}.
double UStatistic(const Trajectory& trajectory, int i, int sigma);

// sum_{t<=tau_i} x_ti^2.
double TruncatedSquareSum(const Trajectory& trajectory, int i);

// 4 n c^2 / d^{2/p} + 2 c^2. The overshoot term scales with c^2 because a
// single coordinate of a feasible action can reach c in magnitude.
double UUpperBound(int d, int64_t n, double p, double c);

// (delta d^{1/p} / (2c)) sum_i U_i(sign(theta_i)).
double SurrogateLowerBound(const Trajectory& trajectory,
                           const HardInstance& instance);

// KL between the trajectory laws under theta and its neighbour flipped at i,
// for unit-variance Gaussian noise: 2 delta^2 sum_{t<=tau_i} x_ti^2.
double TrajectoryKl(const Trajectory& trajectory, const HardInstance& instance,
                    int i);

struct PinskerTerms {
  // UUpperBound * sqrt(KL / 2) with the Gaussian KL above.
  double deviation = 0.0;
  // The same term written as (delta / 2) * UUpperBound * sqrt(sum x_ti^2),
  // which corresponds to a KL four times smaller.
  double literal = 0.0;
};

PinskerTerms PinskerDeviation(const Trajectory& trajectory,
                              const HardInstance& instance, int i);

// (4 sqrt(3) n delta c^2 / d^{2/p}) sqrt(n c^2 / d^{2/p}).
double PinskerCap(int d, int64_t n, double p, double c, double delta);

struct EigenvalueTrace {
  std::vector<int64_t> rounds;
  std::vector<double> min_eigenvalues;
  // Largest eigenvalue at the same rounds; the scale for round-off checks.
  std::vector<double> max_eigenvalues;
};

// lambda_min of the unregularized design matrix at rounds stride, 2 stride,
// ..., always including the final round. stride <= 0 selects max(1, n/256).
EigenvalueTrace MinEigDesign(const Trajectory& trajectory, int64_t stride = 0);

// Monte Carlo estimate of the same KL from simulated reward
// log-likelihood ratios, holding the recorded actions fixed. Cross-check
// only; the audit uses the closed form.
double MonteCarloKl(const Trajectory& trajectory, const HardInstance& instance,
                    int i, int samples, std::mt19937_64& rng);

struct AuditFlag {
  std::string name;
  InequalityCheck check;
  // Part of the pass/fail verdict (diagnostic flags are reported only).
  bool gating = true;
};

struct AuditReport {
  int d = 0;
  int64_t n = 0;
  std::vector<int64_t> stopping_times;
  std::vector<double> u_plus;
  std::vector<double> u_minus;
  std::vector<double> truncated_square_sums;
  double u_upper_bound = 0.0;
  double surrogate = 0.0;
  double pseudo_regret = 0.0;
  std::vector<double> kl_values;
  std::vector<PinskerTerms> pinsker;
  double pinsker_cap = 0.0;
  EigenvalueTrace eigen;
  std::vector<AuditFlag> flags;

  // All gating flags hold.
  bool passed() const;
  double kl_max() const;
  double min_eig_final() const;
  const AuditFlag* Find(const std::string& name) const;
};

// Gating flag names.
inline constexpr char kSurrogateChainFlag[] = "surrogate_chain";
inline constexpr char kUCapFlag[] = "u_cap";
inline constexpr char kOvershootFlag[] = "stopping_overshoot";
inline constexpr char kMinEigMonotoneFlag[] = "min_eig_monotone";
// Diagnostic flag names.
inline constexpr char kPinskerCapFlag[] = "pinsker_cap";
inline constexpr char kPinskerCapLiteralFlag[] = "pinsker_cap_literal";

// Throws InvalidInput when the trajectory is incomplete or carries no hard
// instance.
AuditReport Audit(const Trajectory& trajectory, int64_t eig_stride = 0);

}  // namespace lpbandit

#endif  // LPBANDIT_PROOFCHECK_H_
