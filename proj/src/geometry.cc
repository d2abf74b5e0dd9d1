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

#include "lpbandit/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpbandit/errors.h"

namespace lpbandit {
namespace {

// Below this exponent 1/(p-1) exceeds 5 and powers are taken in log space.
constexpr double kLogSpaceExponent = 1.2;

constexpr double kProjectionTolerance = 1e-12;
constexpr int kProjectionMaxIterations = 200;

double MaxAbs(const Vector& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

void RequireFinite(const Vector& x, const char* what) {
  if (!x.allFinite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

void RequireDim(const LpBall& ball, const Vector& x, const char* what) {
  if (x.size() != ball.dim()) {
    throw InvalidInput(std::string(what) + " has length " +
                       std::to_string(x.size()) + ", expected " +
                       std::to_string(ball.dim()));
  }
}

// r^e for r in [0, 1].
double UnitPow(double r, double e, bool log_space) {
  if (r == 0.0) return 0.0;
  if (e == 1.0) return r;
  if (e == 2.0) return r * r;
  return log_space ? std::exp(e * std::log(r)) : std::pow(r, e);
}

// Solves w + mu * p * w^{p-1} = a for w in [0, a]. The left side is strictly
// increasing in w. The start min(a, (a / (mu p))^{1/(p-1)}) never lies below
// the root, so it is the initial upper bracket.
double SolveCoordinate(double a, double mu, double p) {
  if (a == 0.0) return 0.0;
  if (mu == 0.0) return a;
  double lo = 0.0;
  double hi = std::min(a, std::pow(a / (mu * p), 1.0 / (p - 1.0)));
  double w = hi;
  // Once |h| reaches the rounding level of a, w carries full relative
  // precision and the sign of h is noise.
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * a;
  for (int it = 0; it < 200; ++it) {
    const double wp = std::pow(w, p - 2.0);
    const double h = w + mu * p * w * wp - a;
    if (std::abs(h) <= floor) break;
    if (h > 0.0) {
      hi = w;
    } else {
      lo = w;
    }
    if (hi - lo <= 1e-15 * hi) break;
    const double dh = 1.0 + mu * p * (p - 1.0) * wp;
    double next = w - h / dh;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == w) break;
    w = next;
  }
  return w;
}

}  // namespace

LpBall::LpBall(int dim, double p, double radius)
    : dim_(dim), p_(p), radius_(radius) {
  if (dim < 1) throw InvalidInput("dimension must be >= 1");
  if (!std::isfinite(p) || p < kMinExponent || p > kMaxExponent) {
    throw InvalidExponent("exponent p=" + std::to_string(p) +
                          " outside supported range [1.01, 100]");
  }
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InvalidInput("radius must be positive and finite");
  }
  q_ = DualExponent(p);
  vertex_coordinate_ = radius / std::pow(static_cast<double>(dim), 1.0 / p);
}

double LpNorm(const Vector& x, double p) {
  RequireFinite(x, "LpNorm input");
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidExponent("LpNorm requires finite p >= 1");
  }
  const double scale = MaxAbs(x);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  if (p == 2.0) {
    for (double v : x) sum += (v / scale) * (v / scale);
    return scale * std::sqrt(sum);
  }
  for (double v : x) sum += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

double DualExponent(double p) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw InvalidExponent("dual exponent requires 1 < p < inf");
  }
  return p / (p - 1.0);
}

bool IsFeasible(const LpBall& ball, const Vector& x, double rel_tol) {
  if (x.size() != ball.dim() || !x.allFinite()) return false;
  return LpNorm(x, ball.p()) <= ball.radius() * (1.0 + rel_tol);
}

LinearMaximum ArgmaxLinear(const LpBall& ball, const Vector& theta) {
  RequireDim(ball, theta, "theta");
  RequireFinite(theta, "theta");
  const int d = ball.dim();
  LinearMaximum out{Vector::Zero(d), 0.0};
  const double scale = MaxAbs(theta);
  if (scale == 0.0) return out;

  // x_i is invariant under rescaling theta, so work with r_i = |theta_i|/max.
  const double p = ball.p();
  const double q = ball.q();
  const bool log_space = p < kLogSpaceExponent;
  const double inv_pm1 = 1.0 / (p - 1.0);
  double sum_q = 0.0;
  for (int i = 0; i < d; ++i) {
    const double r = std::abs(theta[i]) / scale;
    out.point[i] = UnitPow(r, inv_pm1, log_space);
    sum_q += UnitPow(r, q, log_space);
  }
  const double denom = p == 2.0 ? std::sqrt(sum_q) : std::pow(sum_q, 1.0 / p);
  for (int i = 0; i < d; ++i) {
    const double sign = theta[i] > 0.0 ? 1.0 : (theta[i] < 0.0 ? -1.0 : 0.0);
    out.point[i] = ball.radius() * sign * out.point[i] / denom;
  }
  out.value = ball.radius() * scale *
              (p == 2.0 ? std::sqrt(sum_q) : std::pow(sum_q, 1.0 / q));
  return out;
}

double LinearMaximumLagrangeForm(const LpBall& ball, const Vector& theta) {
  RequireDim(ball, theta, "theta");
  RequireFinite(theta, "theta");
  const double q = ball.q();
  const double scale = theta.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  // With theta = scale * u the value is scale * c * S / S^{1/p}, where
  // S = sum_i |u_i|^q, because q (1 - 1/p) = 1.
  double sum_q = 0.0;
  for (double v : theta) sum_q += std::pow(std::abs(v) / scale, q);
  return scale * ball.radius() * sum_q / std::pow(sum_q, 1.0 / ball.p());
}

Vector ProjectLp(const LpBall& ball, const Vector& y) {
  RequireDim(ball, y, "projection input");
  RequireFinite(y, "projection input");
  const double c = ball.radius();
  const double p = ball.p();
  if (LpNorm(y, p) <= c) return y;
  if (p == 2.0) return y * (c / y.norm());

  // Work on the unit ball with magnitudes; signs are restored at the end.
  const int d = ball.dim();
  const Vector a = y.cwiseAbs() / c;
  Vector w(d);
  auto residual_at = [&](double mu) {
    for (int i = 0; i < d; ++i) w[i] = SolveCoordinate(a[i], mu, p);
    return LpNorm(w, p) - 1.0;
  };

  // residual(mu) decreases from ||a||_p - 1 > 0 toward -1 as mu grows.
  double mu_lo = 0.0;
  double mu_hi = 1.0;
  double res = residual_at(mu_hi);
  int iterations = 0;
  while (res > 0.0) {
    mu_lo = mu_hi;
    mu_hi *= 4.0;
    res = residual_at(mu_hi);
    if (++iterations > kProjectionMaxIterations) {
      throw NumericalFailure("projection multiplier bracket not found", res);
    }
  }

  double mu = mu_hi;
  while (std::abs(res) > kProjectionTolerance) {
    if (++iterations > kProjectionMaxIterations) {
      throw NumericalFailure("projection multiplier search did not converge",
                             res);
    }
    if (res > 0.0) {
      mu_lo = mu;
    } else {
      mu_hi = mu;
    }
    // Newton on g(mu) = sum_i w_i^p - 1, with
    // dw_i/dmu = -p w_i^{p-1} / (1 + mu p (p-1) w_i^{p-2}).
    double sum_wp = 0.0;
    double dg = 0.0;
    for (int i = 0; i < d; ++i) {
      if (w[i] <= 0.0) continue;
      const double wpm1 = std::pow(w[i], p - 1.0);
      sum_wp += wpm1 * w[i];
      const double dw = -p * wpm1 / (1.0 + mu * p * (p - 1.0) * wpm1 / w[i]);
      dg += p * wpm1 * dw;
    }
    double next = dg < 0.0 ? mu - (sum_wp - 1.0) / dg : 0.5 * (mu_lo + mu_hi);
    if (!(next > mu_lo && next < mu_hi)) next = 0.5 * (mu_lo + mu_hi);
    if (next == mu) break;
    mu = next;
    res = residual_at(mu);
  }

  Vector x(d);
  for (int i = 0; i < d; ++i) {
    x[i] = y[i] < 0.0 ? -c * w[i] : c * w[i];
  }
  return x;
}

void ValidateSigns(const LpBall& ball, std::span<const int> signs) {
  if (static_cast<int>(signs.size()) != ball.dim()) {
    throw InvalidInput("sign pattern length " + std::to_string(signs.size()) +
                       " does not match dimension " +
                       std::to_string(ball.dim()));
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw InvalidInput("sign entries must be +1 or -1");
  }
}

Vector VertexAction(const LpBall& ball, std::span<const int> signs) {
  ValidateSigns(ball, signs);
  Vector x(ball.dim());
  for (int i = 0; i < ball.dim(); ++i) x[i] = ball.vertex_coordinate() * signs[i];
  return x;
}

InequalityCheck CheckLessEqual(double lhs, double rhs, double tolerance,
                               double scale_floor) {
  InequalityCheck check;
  check.lhs = lhs;
  check.rhs = rhs;
  const double scale =
      std::max({std::abs(lhs), std::abs(rhs), std::abs(scale_floor)});
  check.residual = scale == 0.0 ? 0.0 : (rhs - lhs) / scale;
  check.holds = check.residual >= -tolerance;
  return check;
}

InequalityCheck CheckSquaredGapInequality(const LpBall& ball, const Vector& x,
                                          std::span<const int> signs) {
  RequireDim(ball, x, "point");
  ValidateSigns(ball, signs);
  const double a = ball.vertex_coordinate();
  double linear = 0.0;
  double squared = 0.0;
  for (int i = 0; i < ball.dim(); ++i) {
    const double gap = a - x[i] * signs[i];
    linear += gap;
    squared += gap * gap;
  }
  // Both sides vanish at the vertex; the difference equals ||x||^2 - d a^2,
  // so rounding is measured against d a^2.
  return CheckLessEqual(squared, 2.0 * a * linear, kAuditTolerance,
                        ball.dim() * a * a);
}

InequalityCheck CheckNormEquivalence(const LpBall& ball, const Vector& x) {
  RequireDim(ball, x, "point");
  const double c = ball.radius();
  const double bound =
      c * c * std::pow(static_cast<double>(ball.dim()), 1.0 - 2.0 / ball.p());
  return CheckLessEqual(x.squaredNorm(), bound);
}

}  // namespace lpbandit
