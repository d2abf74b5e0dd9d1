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

#include "lpbandit/proofcheck.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "Eigen/Eigenvalues"
#include "lpbandit/errors.h"

namespace lpbandit {
namespace {

void RequireCoordinate(const Trajectory& traj, int i) {
  if (i < 0 || i >= traj.ball.dim()) {
    throw InvalidInput("coordinate index " + std::to_string(i) +
                       " out of range");
  }
}

void RequireComplete(const Trajectory& traj) {
  if (!traj.complete()) {
    throw InvalidInput("audit requires a completed trajectory");
  }
}

double TruncationLevel(const Trajectory& traj) {
  const LpBall& ball = traj.ball;
  const double c = ball.radius();
  return static_cast<double>(traj.horizon) * c * c /
         std::pow(static_cast<double>(ball.dim()), 2.0 / ball.p());
}

// Keeps the worst (smallest residual) of a family of checks.
void KeepWorst(InequalityCheck& worst, const InequalityCheck& candidate,
               bool& first) {
  if (first || candidate.residual < worst.residual) worst = candidate;
  first = false;
}

}  // namespace

int64_t StoppingTime(const Trajectory& traj, int i) {
  RequireComplete(traj);
  RequireCoordinate(traj, i);
  const double level = TruncationLevel(traj);
  double running = 0.0;
  for (int64_t t = 0; t < traj.rounds(); ++t) {
    const double x = traj.actions(t, i);
    running += x * x;
    if (running >= level) return t + 1;
  }
  return traj.horizon;
}

double UStatistic(const Trajectory& traj, int i, int sigma) {
  if (sigma != 1 && sigma != -1) throw InvalidInput("sigma must be +1 or -1");
  const int64_t tau = StoppingTime(traj, i);
  const double a = traj.ball.vertex_coordinate();
  double sum = 0.0;
  for (int64_t t = 0; t < tau; ++t) {
    const double gap = a - traj.actions(t, i) * sigma;
    sum += gap * gap;
  }
  return sum;
}

double TruncatedSquareSum(const Trajectory& traj, int i) {
  const int64_t tau = StoppingTime(traj, i);
  double sum = 0.0;
  for (int64_t t = 0; t < tau; ++t) {
    const double x = traj.actions(t, i);
    sum += x * x;
  }
  return sum;
}

double UUpperBound(int d, int64_t n, double p, double c) {
  if (d < 1 || n < 1 || !(c > 0.0) || !(p > 0.0)) {
    throw InvalidInput("U bound requires positive d, n, p, c");
  }
  return 4.0 * static_cast<double>(n) * c * c /
             std::pow(static_cast<double>(d), 2.0 / p) +
         2.0 * c * c;
}

double SurrogateLowerBound(const Trajectory& traj,
                           const HardInstance& instance) {
  const double a = instance.ball().vertex_coordinate();
  double total = 0.0;
  for (int i = 0; i < instance.ball().dim(); ++i) {
    total += UStatistic(traj, i, instance.signs()[i]);
  }
  return instance.family().delta() / (2.0 * a) * total;
}

double TrajectoryKl(const Trajectory& traj, const HardInstance& instance,
                    int i) {
  const double delta = instance.family().delta();
  return 2.0 * delta * delta * TruncatedSquareSum(traj, i);
}

PinskerTerms PinskerDeviation(const Trajectory& traj,
                              const HardInstance& instance, int i) {
  const LpBall& ball = instance.ball();
  const double bound =
      UUpperBound(ball.dim(), traj.horizon, ball.p(), ball.radius());
  PinskerTerms terms;
  terms.deviation = bound * std::sqrt(0.5 * TrajectoryKl(traj, instance, i));
  terms.literal = 0.5 * instance.family().delta() * bound *
                  std::sqrt(TruncatedSquareSum(traj, i));
  return terms;
}

double PinskerCap(int d, int64_t n, double p, double c, double delta) {
  const double level =
      static_cast<double>(n) * c * c / std::pow(static_cast<double>(d), 2.0 / p);
  return 4.0 * std::numbers::sqrt3 * delta * level * std::sqrt(level);
}

EigenvalueTrace MinEigDesign(const Trajectory& traj, int64_t stride) {
  const int64_t n = traj.rounds();
  const int d = traj.ball.dim();
  if (stride <= 0) stride = std::max<int64_t>(1, traj.horizon / 256);
  EigenvalueTrace trace;
  Matrix design = Matrix::Zero(d, d);
  Eigen::SelfAdjointEigenSolver<Matrix> solver;
  for (int64_t t = 0; t < n; ++t) {
    const Vector x = traj.actions.row(t).transpose();
    design.noalias() += x * x.transpose();
    const int64_t round = t + 1;
    if (round % stride == 0 || round == n) {
      solver.compute(design, Eigen::EigenvaluesOnly);
      trace.rounds.push_back(round);
      trace.min_eigenvalues.push_back(solver.eigenvalues()(0));
      trace.max_eigenvalues.push_back(solver.eigenvalues()(d - 1));
    }
  }
  return trace;
}

double MonteCarloKl(const Trajectory& traj, const HardInstance& instance,
                    int i, int samples, std::mt19937_64& rng) {
  if (samples < 1) throw InvalidInput("need at least one sample");
  const int64_t tau = StoppingTime(traj, i);
  const Vector& theta = instance.theta();
  const Vector theta_flip = NeighborInstance(instance, i).theta();
  std::vector<double> mean(tau), mean_flip(tau);
  for (int64_t t = 0; t < tau; ++t) {
    const auto x = traj.actions.row(t);
    mean[t] = x.dot(theta);
    mean_flip[t] = x.dot(theta_flip);
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    double log_ratio = 0.0;
    for (int64_t t = 0; t < tau; ++t) {
      const double r = mean[t] + normal(rng);
      const double u = r - mean[t];
      const double v = r - mean_flip[t];
      log_ratio += 0.5 * (v * v - u * u);
    }
    total += log_ratio;
  }
  return total / samples;
}

bool AuditReport::passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const AuditFlag& f) {
    return !f.gating || f.check.holds;
  });
}

double AuditReport::kl_max() const {
  return kl_values.empty()
             ? 0.0
             : *std::max_element(kl_values.begin(), kl_values.end());
}

double AuditReport::min_eig_final() const {
  return eigen.min_eigenvalues.empty() ? 0.0 : eigen.min_eigenvalues.back();
}

const AuditFlag* AuditReport::Find(const std::string& name) const {
  for (const AuditFlag& f : flags) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

AuditReport Audit(const Trajectory& traj, int64_t eig_stride) {
  RequireComplete(traj);
  if (!traj.instance) {
    throw InvalidInput("audit requires a trajectory on a hard instance");
  }
  const HardInstance& instance = *traj.instance;
  const LpBall& ball = traj.ball;
  const int d = ball.dim();
  const double c = ball.radius();

  AuditReport report;
  report.d = d;
  report.n = traj.horizon;
  report.u_upper_bound = UUpperBound(d, traj.horizon, ball.p(), c);
  report.pinsker_cap =
      PinskerCap(d, traj.horizon, ball.p(), c, instance.family().delta());
  const double level = TruncationLevel(traj);

  InequalityCheck u_worst, overshoot_worst, pinsker_worst, literal_worst;
  bool u_first = true, overshoot_first = true, pinsker_first = true,
       literal_first = true;
  for (int i = 0; i < d; ++i) {
    report.stopping_times.push_back(StoppingTime(traj, i));
    report.u_plus.push_back(UStatistic(traj, i, 1));
    report.u_minus.push_back(UStatistic(traj, i, -1));
    report.truncated_square_sums.push_back(TruncatedSquareSum(traj, i));
    report.kl_values.push_back(TrajectoryKl(traj, instance, i));
    report.pinsker.push_back(PinskerDeviation(traj, instance, i));

    KeepWorst(u_worst, CheckLessEqual(report.u_plus[i], report.u_upper_bound),
              u_first);
    KeepWorst(u_worst, CheckLessEqual(report.u_minus[i], report.u_upper_bound),
              u_first);
    KeepWorst(overshoot_worst,
              CheckLessEqual(report.truncated_square_sums[i], level + c * c),
              overshoot_first);
    KeepWorst(pinsker_worst,
              CheckLessEqual(report.pinsker[i].deviation, report.pinsker_cap),
              pinsker_first);
    KeepWorst(literal_worst,
              CheckLessEqual(report.pinsker[i].literal, report.pinsker_cap),
              literal_first);
  }

  double u_signed = 0.0;
  for (int i = 0; i < d; ++i) {
    u_signed += instance.signs()[i] == 1 ? report.u_plus[i] : report.u_minus[i];
  }
  report.surrogate =
      instance.family().delta() / (2.0 * ball.vertex_coordinate()) * u_signed;
  report.pseudo_regret = PseudoRegret(traj);

  report.eigen = MinEigDesign(traj, eig_stride);
  InequalityCheck eig_worst;
  bool eig_first = true;
  for (size_t k = 1; k < report.eigen.min_eigenvalues.size(); ++k) {
    // Eigenvalue round-off is relative to the spectral norm.
    KeepWorst(eig_worst,
              CheckLessEqual(report.eigen.min_eigenvalues[k - 1],
                             report.eigen.min_eigenvalues[k], kAuditTolerance,
                             report.eigen.max_eigenvalues[k]),
              eig_first);
  }

  report.flags.push_back(
      {kSurrogateChainFlag,
       CheckLessEqual(report.surrogate, report.pseudo_regret), true});
  report.flags.push_back({kUCapFlag, u_worst, true});
  report.flags.push_back({kOvershootFlag, overshoot_worst, true});
  report.flags.push_back({kMinEigMonotoneFlag, eig_worst, true});
  report.flags.push_back({kPinskerCapFlag, pinsker_worst, false});
  report.flags.push_back({kPinskerCapLiteralFlag, literal_worst, false});
  return report;
}

}  // namespace lpbandit
