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

#ifndef LPBANDIT_GEOMETRY_H_
#define LPBANDIT_GEOMETRY_H_

#include <span>
#include <vector>

#include "Eigen/Core"

// Computations on the L^p ball X = {x in R^d : ||x||_p <= c}.
//
// All functions here are pure; LpBall is an immutable value validated at
// construction.

namespace lpbandit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A sign pattern s in {-1, +1}^d.
using SignPattern = std::vector<int>;

inline constexpr double kMinExponent = 1.01;
inline constexpr double kMaxExponent = 100.0;
inline constexpr double kFeasibilityTolerance = 1e-9;

class LpBall {
 public:
  // Throws InvalidInput for d < 1 or c <= 0 and InvalidExponent for p outside
  // [kMinExponent, kMaxExponent].
  LpBall(int dim, double p, double radius);

  int dim() const { return dim_; }
  double p() const { return p_; }
  double radius() const { return radius_; }

  // Dual exponent q = p / (p - 1).
  double q() const { return q_; }

  // Magnitude c / d^{1/p} of every coordinate of a sign-vertex point.
  double vertex_coordinate() const { return vertex_coordinate_; }

 private:
  int dim_;
  double p_;
  double radius_;
  double q_;
  double vertex_coordinate_;
};

// (sum_i |x_i|^p)^{1/p}, computed on max-scaled coordinates.
double LpNorm(const Vector& x, double p);

// q with 1/p + 1/q = 1. Throws InvalidExponent for p <= 1 or non-finite p.
double DualExponent(double p);

// ||x||_p <= c * (1 + rel_tol).
bool IsFeasible(const LpBall& ball, const Vector& x,
                double rel_tol = kFeasibilityTolerance);

struct LinearMaximum {
  Vector point;
  double value = 0.0;
};

// Maximizer of x.theta over the ball and the optimal value c * ||theta||_q.
// theta == 0 yields the origin with value 0.
LinearMaximum ArgmaxLinear(const LpBall& ball, const Vector& theta);

// The optimal value written as
//   (sum_i |theta_i|^q)^{-1/p} * sum_i c |theta_i|^q,
// kept to check algebraic equality with the dual-norm form.
double LinearMaximumLagrangeForm(const LpBall& ball, const Vector& theta);

// Euclidean projection onto the ball. Points already inside are returned
// unchanged. Throws NumericalFailure if the multiplier search does not reach
// the residual tolerance.
Vector ProjectLp(const LpBall& ball, const Vector& y);

// The point (c / d^{1/p}) * s, which has p-norm c.
Vector VertexAction(const LpBall& ball, std::span<const int> signs);

// Throws InvalidInput unless signs has length dim and entries in {-1, +1}.
void ValidateSigns(const LpBall& ball, std::span<const int> signs);

// Outcome of checking lhs <= rhs. The residual is (rhs - lhs) normalized by
// the larger of |lhs|, |rhs| and `scale_floor` (0 when all vanish); the
// inequality is taken to hold when residual >= -tolerance.
struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool holds = true;
};

inline constexpr double kAuditTolerance = 1e-9;

InequalityCheck CheckLessEqual(double lhs, double rhs,
                               double tolerance = kAuditTolerance,
                               double scale_floor = 0.0);

// sum_i (a - x_i s_i)^2 <= 2a * sum_i (a - x_i s_i), with a = c / d^{1/p}.
// Equivalent to ||x||_2^2 <= d a^2, so it holds on the ball only for p >= 2.
InequalityCheck CheckSquaredGapInequality(const LpBall& ball, const Vector& x,
                                          std::span<const int> signs);

// ||x||_2^2 <= c^2 d^{1 - 2/p}. Holds for feasible x when p >= 2; for p < 2
// the direction of the Holder step flips and axis points violate it.
InequalityCheck CheckNormEquivalence(const LpBall& ball, const Vector& x);

}  // namespace lpbandit

#endif  // LPBANDIT_GEOMETRY_H_
