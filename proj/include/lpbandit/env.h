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

#ifndef LPBANDIT_ENV_H_
#define LPBANDIT_ENV_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "Eigen/Core"
#include "lpbandit/errors.h"
#include "lpbandit/geometry.h"
#include "lpbandit/instance.h"
#include "lpbandit/policy.h"

// Stochastic linear bandit on an L^p ball: reward = x.theta + N(0, 1).

namespace lpbandit {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                Eigen::RowMajor>;

// Complete record of one episode. Row t of `actions` is x_{t+1}.
struct Trajectory {
  LpBall ball;
  Vector theta;
  // Set when the episode ran on a member of the hard family.
  std::optional<HardInstance> instance;
  double optimal_value = 0.0;
  int64_t horizon = 0;
  uint64_t noise_seed = 0;
  RowMatrix actions;
  std::vector<double> rewards;
  std::vector<double> instant_regrets;

  // Rounds recorded so far; equals horizon for a completed episode.
  int64_t rounds() const { return static_cast<int64_t>(rewards.size()); }
  bool complete() const { return rounds() == horizon; }
};

class InfeasibleAction : public Error {
 public:
  InfeasibleAction(const std::string& message,
                   std::shared_ptr<const Trajectory> partial = nullptr)
      : Error(ErrorCode::kInfeasibleAction, message),
        partial_(std::move(partial)) {}

  // Rounds completed before the offending action; may be null.
  const std::shared_ptr<const Trajectory>& partial() const { return partial_; }

 private:
  std::shared_ptr<const Trajectory> partial_;
};

// action.theta + noise. Throws InfeasibleAction if the action leaves the ball.
double PlayRound(const LpBall& ball, const Vector& theta, const Vector& action,
                 double noise);

// Runs `horizon` rounds of `policy` against the instance. The noise stream and
// the policy's internal stream are both derived from `seed`, so identical
// arguments give bit-identical trajectories.
Trajectory RunEpisode(Policy& policy, const HardInstance& instance,
                      int64_t horizon, uint64_t seed);

// Free-play variant on an arbitrary parameter.
Trajectory RunEpisode(Policy& policy, const Vector& theta, int64_t horizon,
                      uint64_t seed);

// Sum of instant regrets over the recorded rounds.
double PseudoRegret(const Trajectory& trajectory);

// Line-oriented text serialization; see docs/trajectory_format.md.
void WriteTrajectory(std::ostream& out, const Trajectory& trajectory);
Trajectory ReadTrajectory(std::istream& in);

}  // namespace lpbandit

#endif  // LPBANDIT_ENV_H_
