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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lpbandit/errors.h"
#include "lpbandit/oracle.h"

namespace lpbandit {
namespace {

Vector Vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

double RelErr(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

Vector RandomFeasible(const LpBall& ball, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  Vector g(ball.dim());
  for (int i = 0; i < ball.dim(); ++i) g[i] = normal(rng);
  return BoundaryPoint(ball, g) * std::pow(unit(rng), 1.0 / ball.dim());
}

TEST(LpBallTest, RejectsBadParameters) {
  EXPECT_THROW(LpBall(0, 2.0, 1.0), InvalidInput);
  EXPECT_THROW(LpBall(2, 2.0, 0.0), InvalidInput);
  EXPECT_THROW(LpBall(2, 2.0, -1.0), InvalidInput);
  EXPECT_THROW(LpBall(2, 1.0, 1.0), InvalidExponent);
  EXPECT_THROW(LpBall(2, 1.005, 1.0), InvalidExponent);
  EXPECT_THROW(LpBall(2, 100.5, 1.0), InvalidExponent);
  EXPECT_THROW(LpBall(2, std::nan(""), 1.0), InvalidExponent);
  EXPECT_NO_THROW(LpBall(2, 1.01, 1.0));
  EXPECT_NO_THROW(LpBall(2, 100.0, 1.0));
}

TEST(LpNormTest, Examples) {
  EXPECT_DOUBLE_EQ(LpNorm(Vec({3, 4}), 2.0), 5.0);
  EXPECT_NEAR(LpNorm(Vec({1, 1, 1, 1}), 4.0), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(LpNorm(Vector::Zero(5), 3.7), 0.0);
}

TEST(LpNormTest, RejectsNonFinite) {
  EXPECT_THROW(LpNorm(Vec({1.0, std::nan("")}), 2.0), InvalidInput);
  EXPECT_THROW(LpNorm(Vec({1.0, INFINITY}), 2.0), InvalidInput);
}

TEST(LpNormTest, NoOverflowForHugeEntries) {
  EXPECT_NEAR(LpNorm(Vec({1e300, 1e300}), 2.0) / 1e300, std::sqrt(2.0),
              1e-14);
  EXPECT_NEAR(LpNorm(Vec({1e-300, 1e-300}), 3.0) / 1e-300,
              std::cbrt(2.0), 1e-14);
}

TEST(DualExponentTest, Examples) {
  EXPECT_DOUBLE_EQ(DualExponent(2.0), 2.0);
  EXPECT_NEAR(DualExponent(1.5), 3.0, 1e-15);
  EXPECT_NEAR(DualExponent(3.0), 1.5, 1e-15);
  EXPECT_THROW(DualExponent(1.0), InvalidExponent);
  EXPECT_THROW(DualExponent(0.5), InvalidExponent);
}

TEST(ArgmaxLinearTest, EuclideanExample) {
  const LinearMaximum m = ArgmaxLinear(LpBall(2, 2.0, 1.0), Vec({3, 4}));
  EXPECT_NEAR(m.point[0], 0.6, 1e-15);
  EXPECT_NEAR(m.point[1], 0.8, 1e-15);
  EXPECT_NEAR(m.value, 5.0, 1e-14);
}

TEST(ArgmaxLinearTest, EqualMagnitudeThetaGivesSignVertex) {
  const LpBall ball(3, 3.0, 1.0);
  for (double delta : {1e-6, 0.02, 1.0, 50.0}) {
    const LinearMaximum m = ArgmaxLinear(ball, delta * Vec({1, -1, 1}));
    // 3^{-1/3} and 3^{2/3}, evaluated at 30 digits.
    EXPECT_NEAR(m.point[0], 0.693361274350634704843352274786, 1e-15);
    EXPECT_NEAR(m.point[1], -0.693361274350634704843352274786, 1e-15);
    EXPECT_NEAR(m.point[2], 0.693361274350634704843352274786, 1e-15);
    EXPECT_LT(RelErr(m.value, delta * 2.08008382305190411453005682436),
              1e-14);
  }
}

TEST(ArgmaxLinearTest, SubEuclideanExampleMatchesGridOracle) {
  const LpBall ball(2, 1.5, 2.0);
  const Vector theta = Vec({1, 2});
  const LinearMaximum m = ArgmaxLinear(ball, theta);
  EXPECT_LT(RelErr(m.value, 4.16016764610380822906011364872), 1e-14);
  const double grid = BoundaryGridMax(
      ball, [&](const Vector& x) { return x.dot(theta); }, 100000);
  EXPECT_LT(RelErr(grid, m.value), 1e-6);
}

TEST(ArgmaxLinearTest, ZeroThetaGivesOrigin) {
  const LinearMaximum m = ArgmaxLinear(LpBall(3, 2.5, 1.0), Vector::Zero(3));
  EXPECT_EQ(m.point, Vector::Zero(3));
  EXPECT_EQ(m.value, 0.0);
}

TEST(ArgmaxLinearTest, RejectsWrongLengthAndNonFinite) {
  const LpBall ball(2, 2.0, 1.0);
  EXPECT_THROW(ArgmaxLinear(ball, Vec({1, 2, 3})), InvalidInput);
  EXPECT_THROW(ArgmaxLinear(ball, Vec({1, std::nan("")})), InvalidInput);
}

TEST(ArgmaxLinearTest, NearOneExponentSmallThetaStaysFinite) {
  // 1/(p-1) = 100: plain powers of tiny coordinates underflow.
  const LpBall ball(3, 1.01, 1.0);
  const LinearMaximum m = ArgmaxLinear(ball, Vec({1e-8, 3e-9, -2e-8}));
  EXPECT_TRUE(m.point.allFinite());
  EXPECT_LT(RelErr(LpNorm(m.point, 1.01), 1.0), 1e-9);
  EXPECT_LT(RelErr(m.value, LinearMaximumLagrangeForm(ball, Vec({1e-8, 3e-9,
                                                                  -2e-8}))),
            1e-9);
}

TEST(ArgmaxLinearProperty, FeasibleOptimalAndDualNorm) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_real_distribution<double> exponent(1.05, 12.0);
  std::uniform_real_distribution<double> radius(0.1, 10.0);
  std::normal_distribution<double> normal;
  for (int instance = 0; instance < 1000; ++instance) {
    const LpBall ball(dim(rng), exponent(rng), radius(rng));
    Vector theta(ball.dim());
    for (int i = 0; i < ball.dim(); ++i) theta[i] = normal(rng);
    const LinearMaximum m = ArgmaxLinear(ball, theta);
    ASSERT_LT(RelErr(LpNorm(m.point, ball.p()), ball.radius()), 1e-9);
    ASSERT_LT(RelErr(m.value, m.point.dot(theta)), 1e-12);
    // Dual norm written out directly.
    double sum = 0.0;
    for (double v : theta) sum += std::pow(std::abs(v), ball.q());
    ASSERT_LT(RelErr(m.value, ball.radius() * std::pow(sum, 1.0 / ball.q())),
              1e-12);
    ASSERT_LT(RelErr(LinearMaximumLagrangeForm(ball, theta), m.value), 1e-12);
    const int samples = instance < 20 ? 10000 : 200;
    for (int k = 0; k < samples; ++k) {
      const Vector x = RandomFeasible(ball, rng);
      ASSERT_LE(x.dot(theta), m.value * (1.0 + 1e-12));
    }
  }
}

TEST(ProjectLpTest, Examples) {
  const LpBall euclid(2, 2.0, 1.0);
  const Vector inside = Vec({0.3, -0.4});
  EXPECT_EQ(ProjectLp(euclid, inside), inside);
  const Vector radial = ProjectLp(euclid, Vec({3, 4}));
  EXPECT_NEAR(radial[0], 0.6, 1e-15);
  EXPECT_NEAR(radial[1], 0.8, 1e-15);
  const Vector axis = ProjectLp(LpBall(2, 4.0, 1.0), Vec({2, 0}));
  EXPECT_NEAR(axis[0], 1.0, 1e-12);
  EXPECT_EQ(axis[1], 0.0);
}

TEST(ProjectLpTest, HugeInputsConverge) {
  const LpBall ball(5, 19.85, 3.07);
  const Vector y =
      Vec({6.7e17, -4.8e17, -1.29e18, 2.37e18, 1.17e17});
  const Vector x = ProjectLp(ball, y);
  EXPECT_LT(RelErr(LpNorm(x, ball.p()), ball.radius()), 1e-9);
}

TEST(ProjectLpProperty, NoFeasiblePointIsCloser) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_real_distribution<double> exponent(1.1, 8.0);
  std::normal_distribution<double> normal;
  for (int instance = 0; instance < 60; ++instance) {
    const LpBall ball(dim(rng), exponent(rng), 1.0);
    Vector y(ball.dim());
    for (int i = 0; i < ball.dim(); ++i) y[i] = 3.0 * normal(rng);
    if (LpNorm(y, ball.p()) <= ball.radius()) continue;
    const Vector x = ProjectLp(ball, y);
    ASSERT_TRUE(IsFeasible(ball, x));
    const double dist = (x - y).norm();
    for (int k = 0; k < 1000; ++k) {
      const Vector z = RandomFeasible(ball, rng);
      ASSERT_GE((z - y).norm(), dist * (1.0 - 1e-12));
    }
  }
}

TEST(VertexActionTest, Examples) {
  EXPECT_EQ(VertexAction(LpBall(4, 2.0, 1.0), SignPattern{1, 1, 1, 1}),
            Vector::Constant(4, 0.5));
  EXPECT_EQ(VertexAction(LpBall(1, 3.0, 2.0), SignPattern{-1}),
            Vector::Constant(1, -2.0));
  const LpBall cube(8, 3.0, 1.0);
  const SignPattern s = {1, -1, -1, 1, 1, 1, -1, 1};
  const Vector x = VertexAction(cube, s);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(x[i], 0.5 * s[i], 1e-15);
  EXPECT_NEAR(LpNorm(x, 3.0), 1.0, 1e-15);
}

TEST(VertexActionTest, RejectsBadSigns) {
  const LpBall ball(2, 2.0, 1.0);
  EXPECT_THROW(VertexAction(ball, SignPattern{1}), InvalidInput);
  EXPECT_THROW(VertexAction(ball, SignPattern{1, 0}), InvalidInput);
}

TEST(CheckLessEqualTest, ResidualIsNormalized) {
  const InequalityCheck ok = CheckLessEqual(1.0, 2.0);
  EXPECT_TRUE(ok.holds);
  EXPECT_DOUBLE_EQ(ok.residual, 0.5);
  const InequalityCheck bad = CheckLessEqual(2.0, 1.0);
  EXPECT_FALSE(bad.holds);
  EXPECT_DOUBLE_EQ(bad.residual, -0.5);
  EXPECT_TRUE(CheckLessEqual(1.0 + 1e-12, 1.0).holds);
  EXPECT_TRUE(CheckLessEqual(0.0, 0.0).holds);
  EXPECT_FALSE(CheckLessEqual(1e-12, 0.0).holds);
  EXPECT_TRUE(CheckLessEqual(1e-12, 0.0, 1e-9, 10.0).holds);
}

TEST(LemmaInequalities, HoldForExponentsAtLeastTwo) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (int d : {2, 4, 8}) {
    for (double p : {2.0, 3.0, 4.0}) {
      for (double c : {0.5, 1.0, 2.0}) {
        const LpBall ball(d, p, c);
        SignPattern s(d);
        for (int k = 0; k < 2000; ++k) {
          const Vector x = RandomFeasible(ball, rng);
          for (int& v : s) v = coin(rng) ? 1 : -1;
          ASSERT_TRUE(CheckSquaredGapInequality(ball, x, s).holds);
          ASSERT_TRUE(CheckNormEquivalence(ball, x).holds);
        }
      }
    }
  }
}

TEST(LemmaInequalities, NormBoundIsTightAtVertices) {
  for (double p : {1.5, 2.0, 4.0}) {
    const LpBall ball(4, p, 1.7);
    const InequalityCheck check =
        CheckNormEquivalence(ball, VertexAction(ball, SignPattern{1, -1, 1, 1}));
    EXPECT_LT(std::abs(check.lhs - check.rhs), 1e-12 * check.rhs);
  }
}

TEST(LemmaInequalities, FailBelowTwoAtAxisPoints) {
  // ||c e_1||_2^2 = c^2 exceeds c^2 d^{1-2/p} whenever p < 2 and d > 1.
  const LpBall ball(2, 1.5, 1.0);
  const Vector axis = Vec({1.0, 0.0});
  const InequalityCheck norm = CheckNormEquivalence(ball, axis);
  EXPECT_FALSE(norm.holds);
  EXPECT_NEAR(norm.rhs, std::pow(2.0, -1.0 / 3.0), 1e-15);
  EXPECT_FALSE(CheckSquaredGapInequality(ball, axis, SignPattern{1, 1}).holds);
}

TEST(LemmaInequalities, SquaredGapEqualsNormFormIdentity) {
  // sum (a - x s)^2 - 2a sum (a - x s) = ||x||^2 - d a^2.
  std::mt19937_64 rng(9);
  const LpBall ball(5, 3.0, 1.3);
  const double a = ball.vertex_coordinate();
  const SignPattern s = {1, -1, 1, 1, -1};
  for (int k = 0; k < 100; ++k) {
    const Vector x = RandomFeasible(ball, rng);
    const InequalityCheck check = CheckSquaredGapInequality(ball, x, s);
    EXPECT_NEAR(check.lhs - check.rhs, x.squaredNorm() - 5 * a * a, 1e-13);
  }
}

}  // namespace
}  // namespace lpbandit
