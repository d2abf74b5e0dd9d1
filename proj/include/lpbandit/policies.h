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

#ifndef LPBANDIT_POLICIES_H_
#define LPBANDIT_POLICIES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "Eigen/Cholesky"
#include "lpbandit/geometry.h"
#include "lpbandit/policy.h"

namespace lpbandit {

// Regularized least squares: gram = lambda I + sum x x^T, moment = sum x r,
// theta_hat = gram^{-1} moment. Re-factorizes on every update.
class RidgeState {
 public:
  RidgeState(int dim, double lambda);

  // Throws NumericalFailure if the updated gram matrix is not SPD.
  void Update(const Vector& action, double reward);

  int dim() const { return static_cast<int>(moment_.size()); }
  double lambda() const { return lambda_; }
  int64_t round() const { return round_; }
  const Matrix& gram() const { return gram_; }
  const Vector& moment() const { return moment_; }
  const Vector& theta_hat() const { return theta_hat_; }
  // gram^{-1}, kept in sync with every update.
  const Matrix& gram_inverse() const { return gram_inverse_; }

 private:
  double lambda_;
  int64_t round_ = 0;
  Matrix gram_;
  Vector moment_;
  Vector theta_hat_;
  Matrix gram_inverse_;
  Eigen::LLT<Matrix> llt_;
};

// How each ascent iteration of the UCB maximizer moves.
enum class AscentStep {
  // x <- ArgmaxLinear(ball, grad f(x)): the large-step limit of the projected
  // gradient step, closed form and monotone for convex f.
  kLinearized,
  // x <- ProjectLp(x + eta grad f(x)) with a backtracking search on eta.
  kProjected,
};

struct UcbOptions {
  int restarts = 8;
  int max_iterations = 500;
  double tolerance = 1e-10;
  // Flat objectives creep: a start also counts as converged once its last
  // relative gain and the geometric tail estimated from the last two gains
  // fall below this, or when it exhausts max_iterations with a last gain
  // below it.
  double stall_tolerance = 1e-6;
  AscentStep step = AscentStep::kLinearized;
};

struct UcbResult {
  Vector point;
  double value = 0.0;
  // Index of the start that produced `point`; 0 is the greedy anchor.
  int start = 0;
  int converged_starts = 0;
};

// f(x) = x.theta_hat + beta sqrt(x^T gram_inverse x).
double UcbObjective(const Vector& x, const Vector& theta_hat,
                    const Matrix& gram_inverse, double beta);

// Multi-start ascent on f over the ball. Starts: the greedy anchor
// ArgmaxLinear(theta_hat), then random sign vertices, then one random boundary
// point. The best final value wins; values within 1e-12 (relative) of the best
// resolve to the lowest start index. Throws NumericalFailure when no start
// converges within the iteration cap.
UcbResult UcbMaximize(const LpBall& ball, const Vector& theta_hat,
                      const Matrix& gram_inverse, double beta,
                      std::mt19937_64& rng, const UcbOptions& options = {});

// Same, with the gram matrix given instead of its inverse.
UcbResult UcbMaximizeGram(const LpBall& ball, const Vector& theta_hat,
                          const Matrix& gram, double beta, std::mt19937_64& rng,
                          const UcbOptions& options = {});

// Uniformly random sign vertex of the ball.
Vector UniformVertex(const LpBall& ball, std::mt19937_64& rng);

// Plays a fixed point every round. Used for oracle, anti-oracle and origin
// reference runs; a policy that knows theta is outside the bandit protocol.
class FixedActionPolicy : public Policy {
 public:
  FixedActionPolicy(const LpBall& ball, Vector action, std::string label);
  std::string name() const override { return label_; }

 protected:
  void DoReset(uint64_t) override {}
  Vector DoAct(int64_t) override { return action_; }
  void DoUpdate(const Vector&, double) override {}

 private:
  Vector action_;
  std::string label_;
};

class UniformVertexPolicy : public Policy {
 public:
  explicit UniformVertexPolicy(const LpBall& ball) : Policy(ball) {}
  std::string name() const override { return "uniform"; }

 protected:
  void DoReset(uint64_t seed) override { rng_.seed(seed); }
  Vector DoAct(int64_t) override { return UniformVertex(ball(), rng_); }
  void DoUpdate(const Vector&, double) override {}

 private:
  std::mt19937_64 rng_;
};

// Explore with uniform vertices for `exploration` rounds, then commit to
// ArgmaxLinear(theta_hat) computed once at the end of exploration.
class ExploreThenCommitPolicy : public Policy {
 public:
  ExploreThenCommitPolicy(const LpBall& ball, int64_t exploration,
                          double lambda);
  std::string name() const override { return "etc"; }

  int64_t exploration() const { return exploration_; }
  const RidgeState& state() const { return state_; }
  // Set once exploration ends.
  const std::optional<Vector>& committed() const { return committed_; }

 protected:
  void DoReset(uint64_t seed) override;
  Vector DoAct(int64_t t) override;
  void DoUpdate(const Vector& action, double reward) override;

 private:
  int64_t exploration_;
  RidgeState state_;
  std::mt19937_64 rng_;
  std::optional<Vector> committed_;
};

// Default exploration length ceil(d sqrt(n)).
int64_t DefaultExploration(int dim, int64_t horizon);

struct LinUcbConfig {
  double lambda = 1.0;
  double delta = 0.01;
  double sigma = 1.0;
  // Upper estimate of ||theta||_2.
  double theta_norm = 1.0;
  UcbOptions ucb;
};

// beta_t = sigma sqrt(d log((1 + t c^2 / lambda) / delta)) + sqrt(lambda) S.
double ConfidenceWidth(const LinUcbConfig& config, int dim, double radius,
                       int64_t t);

class LinUcbPolicy : public Policy {
 public:
  LinUcbPolicy(const LpBall& ball, const LinUcbConfig& config);
  std::string name() const override { return "linucb"; }

  const LinUcbConfig& config() const { return config_; }
  const RidgeState& state() const { return state_; }

 protected:
  void DoReset(uint64_t seed) override;
  Vector DoAct(int64_t t) override;
  void DoUpdate(const Vector& action, double reward) override;

 private:
  LinUcbConfig config_;
  RidgeState state_;
  std::mt19937_64 rng_;
};

// Hyperparameters for the policies selectable by name.
struct PolicyConfig {
  std::string name = "linucb";
  // 0 selects DefaultExploration.
  int64_t etc_m = 0;
  double etc_lambda = 1e-6;
  double linucb_lambda = 1.0;
  double linucb_delta = 0.01;
  double linucb_sigma = 1.0;
  // Unset: use the instance's ||theta||_2 when known, otherwise 1.
  std::optional<double> linucb_theta_norm;
  int linucb_restarts = 8;
  AscentStep linucb_ascent = AscentStep::kLinearized;
};

// Builds "uniform", "etc" or "linucb". `theta_norm_hint` feeds the LinUCB
// confidence width when no explicit value is configured. Throws ConfigError
// for unknown names or invalid hyperparameters.
std::unique_ptr<Policy> MakePolicy(const PolicyConfig& config,
                                   const LpBall& ball, int64_t horizon,
                                   std::optional<double> theta_norm_hint = {});

}  // namespace lpbandit

#endif  // LPBANDIT_POLICIES_H_
