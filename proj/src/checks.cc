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


#include "lpbandit/checks.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "lpbandit/errors.h"
#include "lpbandit/oracle.h"
#include "lpbandit/rng.h"

namespace lpbandit {
namespace {

constexpr uint64_t kLemmaTag = 0x6c656d6d61ULL;
constexpr uint64_t kOracleTag = 0x6f7261636c65ULL;

Vector GaussianVector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector g(d);
  do {
    for (int i = 0; i < d; ++i) g[i] = normal(rng);
  } while (g.squaredNorm() == 0.0);
  return g;
}

// Mixture of four feasible-point families, cycled by `kind`.
Vector SampleFeasible(const LpBall& ball, int kind, std::mt19937_64& rng) {
  const int d = ball.dim();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (kind % 4) {
    case 0: {
      // Interior, radius distributed as U^{1/d}.
      const Vector g = GaussianVector(d, rng);
      return BoundaryPoint(ball, g) * std::pow(unit(rng), 1.0 / d);
    }
    case 1:
      return BoundaryPoint(ball, GaussianVector(d, rng));
    case 2: {
      // A sign vertex with a small perturbation, pulled back inside.
      std::bernoulli_distribution coin(0.5);
      SignPattern s(d);
      for (int& v : s) v = coin(rng) ? 1 : -1;
      Vector x = VertexAction(ball, s) + 0.05 * ball.vertex_coordinate() *
                                             GaussianVector(d, rng);
      const double norm = LpNorm(x, ball.p());
      if (norm > ball.radius()) x *= ball.radius() / norm;
      return x;
    }
    default: {
      // Boundary point supported on a random nonempty coordinate subset.
      Vector g = GaussianVector(d, rng);
      std::uniform_int_distribution<uint64_t> mask_dist(
          1, (uint64_t{1} << d) - 1);
      const uint64_t mask = mask_dist(rng);
      for (int i = 0; i < d; ++i) {
        if (((mask >> i) & 1) == 0) g[i] = 0.0;
      }
      if (g.squaredNorm() == 0.0) g[std::countr_zero(mask)] = 1.0;
      return BoundaryPoint(ball, g);
    }
  }
}

void Track(const InequalityCheck& check, const Vector& x,
           const SignPattern& signs, int64_t& violations, double& worst,
           std::optional<LemmaCounterexample>& example) {
  if (check.residual < worst) worst = check.residual;
  if (check.holds) return;
  ++violations;
  if (!example || check.residual < example->check.residual) {
    example = LemmaCounterexample{x, signs, check};
  }
}

double RelativeError(double value, double reference) {
  const double scale = std::max(std::abs(reference), 1e-300);
  return std::abs(value - reference) / scale;
}

}  // namespace

std::vector<BallSpec> DefaultLemmaConfigs() {
  std::vector<BallSpec> configs;
  for (int d : {2, 4, 8}) {
    for (double p : {1.5, 2.0, 4.0}) {
      for (double c : {0.5, 1.0, 2.0}) configs.push_back({d, p, c});
    }
  }
  return configs;
}

int64_t LemmaSweepReport::total_violations() const {
  int64_t total = 0;
  for (const LemmaConfigResult& r : configs) total += r.violations();
  return total;
}

LemmaSweepReport VerifyLemmas(int64_t trials, uint64_t master_seed,
                              const std::vector<BallSpec>& configs) {
  if (trials < 1) throw InvalidInput("verify-lemmas needs at least one trial");
  LemmaSweepReport report;
  report.trials_per_config = trials;
  report.master_seed = master_seed;
  for (size_t k = 0; k < configs.size(); ++k) {
    const BallSpec& spec = configs[k];
    const LpBall ball(spec.d, spec.p, spec.c);
    std::mt19937_64 rng(DeriveSeed(master_seed, {kLemmaTag, k}));
    std::bernoulli_distribution coin(0.5);
    LemmaConfigResult result;
    result.spec = spec;
    result.trials = trials;
    result.worst_gap_residual = std::numeric_limits<double>::infinity();
    result.worst_norm_residual = std::numeric_limits<double>::infinity();

    SignPattern signs(spec.d);
    for (int64_t t = 0; t < trials; ++t) {
      const Vector x = SampleFeasible(ball, static_cast<int>(t), rng);
      for (int& s : signs) s = coin(rng) ? 1 : -1;
      Track(CheckSquaredGapInequality(ball, x, signs), x, signs,
            result.gap_violations, result.worst_gap_residual,
            result.gap_example);
      Track(CheckNormEquivalence(ball, x), x, signs, result.norm_violations,
            result.worst_norm_residual, result.norm_example);

      // The closed-form maximizer must dominate every feasible point.
      const Vector theta = GaussianVector(spec.d, rng);
      const LinearMaximum best = ArgmaxLinear(ball, theta);
      const double scale = ball.radius() * theta.cwiseAbs().sum();
      if (!CheckLessEqual(x.dot(theta), best.value, kAuditTolerance, scale)
               .holds) {
        ++result.dominance_violations;
      }

      const Vector vertex = VertexAction(ball, signs);
      const InequalityCheck at_vertex = CheckNormEquivalence(ball, vertex);
      if (std::abs(at_vertex.lhs - at_vertex.rhs) >
          kAuditTolerance * at_vertex.rhs) {
        ++result.vertex_equality_failures;
      }
    }
    report.configs.push_back(std::move(result));
  }
  return report;
}

double OracleReport::worst_relative_error() const {
  double worst = 0.0;
  for (const OracleCase& c : cases) {
    worst = std::max(worst, c.worst_relative_error);
  }
  return worst;
}

int64_t OracleReport::failures() const {
  int64_t count = 0;
  for (const OracleCase& c : cases) {
    if (!(c.worst_relative_error <= tolerance)) ++count;
  }
  return count;
}

OracleReport OracleCheck(int instances, uint64_t master_seed,
                         double tolerance) {
  if (instances < 1) throw InvalidInput("oracle-check needs an instance");
  OracleReport report;
  report.tolerance = tolerance;
  for (int k = 0; k < instances; ++k) {
    std::mt19937_64 rng(
        DeriveSeed(master_seed, {kOracleTag, static_cast<uint64_t>(k)}));
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_real_distribution<double> exponent(1.1, 20.0);
    std::uniform_real_distribution<double> radius(0.1, 10.0);
    OracleCase item;
    item.spec = {dim(rng), exponent(rng), radius(rng)};
    const LpBall ball(item.spec.d, item.spec.p, item.spec.c);
    item.theta = GaussianVector(item.spec.d, rng);

    item.closed_form = ArgmaxLinear(ball, item.theta).value;
    item.lagrange_form = LinearMaximumLagrangeForm(ball, item.theta);
    item.ascent =
        ProjectedAscentLinearMax(ball, item.theta, kOracleAscentStarts, rng);
    item.worst_relative_error =
        std::max(RelativeError(item.closed_form, item.ascent),
                 RelativeError(item.lagrange_form, item.closed_form));
    if (item.spec.d <= 3) {
      const Vector& theta = item.theta;
      item.grid = BoundaryGridMax(
          ball, [&theta](const Vector& x) { return x.dot(theta); },
          kOracleGridPoints);
      item.worst_relative_error = std::max(
          item.worst_relative_error, RelativeError(item.closed_form, item.grid));
    } else {
      item.grid = std::numeric_limits<double>::quiet_NaN();
    }
    report.cases.push_back(std::move(item));
  }
  return report;
}

}  // namespace lpbandit
