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

#include "lpbandit/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lpbandit/errors.h"

namespace lpbandit {
namespace {

constexpr int kAscentIterations = 70;
constexpr double kRefineFloor = 1e-12;

Vector Direction2(double phi) {
  Vector u(2);
  u << std::cos(phi), std::sin(phi);
  return u;
}

Vector Direction3(double polar, double azimuth) {
  Vector u(3);
  u << std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
      std::cos(polar);
  return u;
}

// Golden-section search for a local maximum of g on [lo, hi].
double GoldenMax(const std::function<double(double)>& g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  while (b - a > kRefineFloor) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = g(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

Vector BoundaryPoint(const LpBall& ball, const Vector& direction) {
  const double norm = LpNorm(direction, ball.p());
  if (norm == 0.0) throw InvalidInput("zero direction has no boundary point");
  return direction * (ball.radius() / norm);
}

double ProjectedAscentLinearMax(const LpBall& ball, const Vector& theta,
                                int starts, std::mt19937_64& rng) {
  const int d = ball.dim();
  const double theta_norm = theta.norm();
  if (theta_norm == 0.0) return 0.0;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    Vector x(d);
    for (int i = 0; i < d; ++i) x[i] = normal(rng);
    x = BoundaryPoint(ball, x) * unit(rng);
    double value = x.dot(theta);
    double eta = 0.1 * ball.radius() / theta_norm;
    for (int k = 0; k < kAscentIterations; ++k) {
      const Vector next = ProjectLp(ball, x + eta * theta);
      const double next_value = next.dot(theta);
      const double change = next_value - value;
      x = next;
      value = next_value;
      if (k > 8 && std::abs(change) <= 1e-15 * std::abs(value)) break;
      eta *= 2.0;
    }
    best = std::max(best, value);
  }
  return best;
}

double BoundaryGridMax(const LpBall& ball, const Objective& objective,
                       int grid_points) {
  const int d = ball.dim();
  if (grid_points < 1) throw InvalidInput("grid needs at least one point");
  if (d == 1) {
    Vector plus(1), minus(1);
    plus << ball.radius();
    minus << -ball.radius();
    return std::max(objective(plus), objective(minus));
  }
  if (d == 2) {
    auto g = [&](double phi) {
      return objective(BoundaryPoint(ball, Direction2(phi)));
    };
    const double step = 2.0 * std::numbers::pi / grid_points;
    int best_k = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid_points; ++k) {
      const double v = g(k * step);
      if (v > best) {
        best = v;
        best_k = k;
      }
    }
    const double centre = best_k * step;
    return std::max(best, GoldenMax(g, centre - step, centre + step));
  }
  if (d == 3) {
    auto g = [&](double polar, double azimuth) {
      return objective(BoundaryPoint(ball, Direction3(polar, azimuth)));
    };
    // Fibonacci lattice on the sphere.
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    double best = -std::numeric_limits<double>::infinity();
    double best_polar = 0.0, best_azimuth = 0.0;
    for (int k = 0; k < grid_points; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / grid_points;
      const double polar = std::acos(z);
      const double azimuth = golden_angle * k;
      const double v = g(polar, azimuth);
      if (v > best) {
        best = v;
        best_polar = polar;
        best_azimuth = azimuth;
      }
    }
    // Compass search in (polar, azimuth) around the best lattice point.
    double step = 4.0 * std::sqrt(4.0 * std::numbers::pi / grid_points);
    const double offsets[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (step > kRefineFloor) {
      bool moved = false;
      for (const auto& o : offsets) {
        const double polar = best_polar + o[0] * step;
        const double azimuth = best_azimuth + o[1] * step;
        const double v = g(polar, azimuth);
        if (v > best) {
          best = v;
          best_polar = polar;
          best_azimuth = azimuth;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    return best;
  }
  throw InvalidInput("boundary grid supports d <= 3");
}

}  // namespace lpbandit
