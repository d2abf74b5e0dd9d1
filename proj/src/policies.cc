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

#include "lpbandit/policies.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "lpbandit/errors.h"

namespace lpbandit {
namespace {

constexpr double kTieTolerance = 1e-12;
constexpr int kMaxBacktracks = 40;
constexpr double kMaxExtrapolation = 1024.0;

struct AscentOutcome {
  Vector x;
  double value = 0.0;
  bool converged = false;
};

class UcbProblem {
 public:
  UcbProblem(const LpBall& ball, const Vector& theta_hat,
             const Matrix& gram_inverse, double beta)
      : ball_(ball), theta_hat_(theta_hat), a_(gram_inverse), beta_(beta) {}

  double Value(const Vector& x) const {
    return UcbObjective(x, theta_hat_, a_, beta_);
  }

  // theta_hat + beta A x / ||x||_A; the width term is dropped at x = 0.
  Vector Gradient(const Vector& x) const {
    const Vector ax = a_ * x;
    const double width = std::sqrt(std::max(0.0, x.dot(ax)));
    if (beta_ == 0.0 || width == 0.0) return theta_hat_;
    return theta_hat_ + (beta_ / width) * ax;
  }

  AscentOutcome Ascend(Vector x, const UcbOptions& options) const {
    AscentOutcome out;
    double f = Value(x);
    if (!std::isfinite(f)) return out;
    const double tol = options.tolerance;
    double eta = 0.0;
    double last_gain = std::numeric_limits<double>::infinity();
    for (int it = 0; it < options.max_iterations; ++it) {
      const Vector g = Gradient(x);
      const double gnorm = g.norm();
      if (!std::isfinite(gnorm)) {
        last_gain = std::numeric_limits<double>::infinity();
        break;
      }
      if (gnorm == 0.0) {
        out.converged = true;
        break;
      }
      if (options.step == AscentStep::kLinearized) {
        Vector y = ArgmaxLinear(ball_, g).point;
        const double fy = Value(y);
        if (!std::isfinite(fy)) {
          last_gain = std::numeric_limits<double>::infinity();
          break;
        }
        const double start = f;
        if (fy > f) {
          // The fixed-point map contracts slowly when A is near isotropic;
          // try longer moves along the same direction, pulled back radially.
          const Vector dir = y - x;
          x = std::move(y);
          f = fy;
          for (double s = 2.0; s <= kMaxExtrapolation; s *= 2.0) {
            Vector z = x + (s - 1.0) * dir;
            const double norm = LpNorm(z, ball_.p());
            if (norm > ball_.radius()) z *= ball_.radius() / norm;
            const double fz = Value(z);
            if (!(fz > f)) break;
            x = std::move(z);
            f = fz;
          }
        }
        const double prev_gain = last_gain;
        last_gain = (f - start) / std::max(1.0, std::abs(f));
        if (last_gain < tol) {
          out.converged = true;
          break;
        }
        // Geometric-tail estimate of what further iterations could add.
        if (last_gain < options.stall_tolerance && last_gain < prev_gain) {
          const double r = last_gain / prev_gain;
          if (last_gain * r / (1.0 - r) < options.stall_tolerance) {
            out.converged = true;
            break;
          }
        }
        continue;
      }

      // Projected step with backtracking; eta grows again after success.
      if (eta == 0.0) eta = ball_.radius() / gnorm;
      bool improved = false;
      Vector y;
      double fy = f;
      for (int k = 0; k < kMaxBacktracks; ++k) {
        y = ProjectLp(ball_, x + eta * g);
        fy = Value(y);
        if (fy > f) {
          improved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!improved) {
        out.converged = true;
        break;
      }
      const double mapping = (y - x).norm() / eta;
      const double gain = fy - f;
      last_gain = gain / std::max(1.0, std::abs(fy));
      x = std::move(y);
      f = fy;
      if (mapping < tol || gain < tol * std::max(1.0, std::abs(f))) {
        out.converged = true;
        break;
      }
      eta *= 2.0;
    }
    if (!out.converged && last_gain < options.stall_tolerance) {
      out.converged = true;
    }
    out.x = std::move(x);
    out.value = f;
    return out;
  }

 private:
  const LpBall& ball_;
  const Vector& theta_hat_;
  const Matrix& a_;
  double beta_;
};

Vector RandomBoundaryPoint(const LpBall& ball, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector z(ball.dim());
  for (int i = 0; i < ball.dim(); ++i) z[i] = normal(rng);
  const double norm = LpNorm(z, ball.p());
  if (norm == 0.0) return UniformVertex(ball, rng);
  return z * (ball.radius() / norm);
}

}  // namespace

RidgeState::RidgeState(int dim, double lambda)
    : lambda_(lambda),
      gram_(Matrix::Identity(dim, dim) * lambda),
      moment_(Vector::Zero(dim)),
      theta_hat_(Vector::Zero(dim)),
      gram_inverse_(Matrix::Identity(dim, dim) / lambda) {
  if (dim < 1) throw InvalidInput("ridge state dimension must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidInput("ridge regularizer must be positive");
  }
}

void RidgeState::Update(const Vector& action, double reward) {
  if (action.size() != dim()) throw InvalidInput("action length mismatch");
  gram_.noalias() += action * action.transpose();
  moment_ += reward * action;
  ++round_;
  llt_.compute(gram_);
  if (llt_.info() != Eigen::Success) {
    throw NumericalFailure("gram matrix lost positive definiteness",
                           gram_.diagonal().minCoeff());
  }
  theta_hat_ = llt_.solve(moment_);
  gram_inverse_ = llt_.solve(Matrix::Identity(dim(), dim()));
}

double UcbObjective(const Vector& x, const Vector& theta_hat,
                    const Matrix& gram_inverse, double beta) {
  const double quad = x.dot(gram_inverse * x);
  return x.dot(theta_hat) + beta * std::sqrt(std::max(0.0, quad));
}

UcbResult UcbMaximize(const LpBall& ball, const Vector& theta_hat,
                      const Matrix& gram_inverse, double beta,
                      std::mt19937_64& rng, const UcbOptions& options) {
  const int d = ball.dim();
  if (theta_hat.size() != d || gram_inverse.rows() != d ||
      gram_inverse.cols() != d) {
    throw InvalidInput("UCB inputs do not match the ball dimension");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidInput("confidence width must be finite and >= 0");
  }
  if (options.restarts < 1 || options.max_iterations < 1) {
    throw InvalidInput("UCB maximizer needs at least one start and iteration");
  }

  const UcbProblem problem(ball, theta_hat, gram_inverse, beta);
  const Vector anchor = ArgmaxLinear(ball, theta_hat).point;
  if (beta == 0.0) {
    return UcbResult{anchor, problem.Value(anchor), 0, 1};
  }

  UcbResult best;
  best.start = -1;
  double last_residual = 0.0;
  for (int s = 0; s < options.restarts; ++s) {
    Vector start;
    if (s == 0) {
      start = anchor;
    } else if (s == options.restarts - 1) {
      start = RandomBoundaryPoint(ball, rng);
    } else {
      start = UniformVertex(ball, rng);
    }
    AscentOutcome outcome = problem.Ascend(std::move(start), options);
    if (outcome.converged) {
      ++best.converged_starts;
    } else {
      last_residual = outcome.value;
    }
    // Unconverged iterates are still feasible ascent points and stay eligible.
    if (outcome.x.size() == 0) continue;
    const double margin = kTieTolerance * std::max(1.0, std::abs(best.value));
    if (best.start < 0 || outcome.value > best.value + margin) {
      best.point = std::move(outcome.x);
      best.value = outcome.value;
      best.start = s;
    }
  }
  if (best.converged_starts == 0) {
    throw NumericalFailure("no UCB ascent start converged", last_residual);
  }
  return best;
}

UcbResult UcbMaximizeGram(const LpBall& ball, const Vector& theta_hat,
                          const Matrix& gram, double beta, std::mt19937_64& rng,
                          const UcbOptions& options) {
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw NumericalFailure("gram matrix is not positive definite", 0.0);
  }
  const Matrix inverse = llt.solve(Matrix::Identity(gram.rows(), gram.cols()));
  return UcbMaximize(ball, theta_hat, inverse, beta, rng, options);
}

Vector UniformVertex(const LpBall& ball, std::mt19937_64& rng) {
  SignPattern signs(ball.dim());
  uint64_t bits = 0;
  for (int i = 0; i < ball.dim(); ++i) {
    if (i % 64 == 0) bits = rng();
    signs[i] = (bits >> (i % 64)) & 1u ? -1 : 1;
  }
  return VertexAction(ball, signs);
}

FixedActionPolicy::FixedActionPolicy(const LpBall& ball, Vector action,
                                     std::string label)
    : Policy(ball), action_(std::move(action)), label_(std::move(label)) {
  if (action_.size() != ball.dim()) {
    throw InvalidInput("fixed action length mismatch");
  }
}

int64_t DefaultExploration(int dim, int64_t horizon) {
  return static_cast<int64_t>(
      std::ceil(dim * std::sqrt(static_cast<double>(horizon))));
}

ExploreThenCommitPolicy::ExploreThenCommitPolicy(const LpBall& ball,
                                                 int64_t exploration,
                                                 double lambda)
    : Policy(ball), exploration_(exploration), state_(ball.dim(), lambda) {
  if (exploration < ball.dim()) {
    throw InvalidInput("exploration length must be at least the dimension");
  }
}

void ExploreThenCommitPolicy::DoReset(uint64_t seed) {
  state_ = RidgeState(ball().dim(), state_.lambda());
  rng_.seed(seed);
  committed_.reset();
}

Vector ExploreThenCommitPolicy::DoAct(int64_t t) {
  if (t < exploration_) return UniformVertex(ball(), rng_);
  if (!committed_) committed_ = ArgmaxLinear(ball(), state_.theta_hat()).point;
  return *committed_;
}

void ExploreThenCommitPolicy::DoUpdate(const Vector& action, double reward) {
  // The estimate is frozen once the commit action has been chosen.
  if (!committed_) state_.Update(action, reward);
}

double ConfidenceWidth(const LinUcbConfig& config, int dim, double radius,
                       int64_t t) {
  const double growth =
      (1.0 + static_cast<double>(t) * radius * radius / config.lambda) /
      config.delta;
  return config.sigma * std::sqrt(dim * std::log(growth)) +
         std::sqrt(config.lambda) * config.theta_norm;
}

LinUcbPolicy::LinUcbPolicy(const LpBall& ball, const LinUcbConfig& config)
    : Policy(ball), config_(config), state_(ball.dim(), config.lambda) {
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw InvalidInput("confidence level delta must lie in (0, 1)");
  }
  if (!(config.sigma >= 0.0) || !(config.theta_norm >= 0.0)) {
    throw InvalidInput("sigma and theta norm bound must be >= 0");
  }
}

void LinUcbPolicy::DoReset(uint64_t seed) {
  state_ = RidgeState(ball().dim(), config_.lambda);
  rng_.seed(seed);
}

Vector LinUcbPolicy::DoAct(int64_t) {
  const double beta =
      ConfidenceWidth(config_, ball().dim(), ball().radius(), state_.round());
  return UcbMaximize(ball(), state_.theta_hat(), state_.gram_inverse(), beta,
                     rng_, config_.ucb)
      .point;
}

void LinUcbPolicy::DoUpdate(const Vector& action, double reward) {
  state_.Update(action, reward);
}

std::unique_ptr<Policy> MakePolicy(const PolicyConfig& config,
                                   const LpBall& ball, int64_t horizon,
                                   std::optional<double> theta_norm_hint) {
  try {
    if (config.name == "uniform") {
      return std::make_unique<UniformVertexPolicy>(ball);
    }
    if (config.name == "etc") {
      const int64_t m = config.etc_m > 0
                            ? config.etc_m
                            : DefaultExploration(ball.dim(), horizon);
      return std::make_unique<ExploreThenCommitPolicy>(ball, m,
                                                       config.etc_lambda);
    }
    if (config.name == "linucb") {
      LinUcbConfig lin;
      lin.lambda = config.linucb_lambda;
      lin.delta = config.linucb_delta;
      lin.sigma = config.linucb_sigma;
      lin.theta_norm = config.linucb_theta_norm.value_or(
          theta_norm_hint.value_or(1.0));
      lin.ucb.restarts = config.linucb_restarts;
      lin.ucb.step = config.linucb_ascent;
      if (lin.ucb.restarts < 1) throw InvalidInput("linucb.restarts must be >= 1");
      return std::make_unique<LinUcbPolicy>(ball, lin);
    }
  } catch (const InvalidInput& e) {
    throw ConfigError(config.name + ": " + e.what());
  }
  throw ConfigError("unknown policy '" + config.name +
                    "' (expected uniform, etc or linucb)");
}

}  // namespace lpbandit
