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

#include "lpbandit/env.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "lpbandit/rng.h"

namespace lpbandit {
namespace {

constexpr char kTrajectoryMagic[] = "# lpbandit trajectory v1";

Trajectory RunEpisodeImpl(Policy& policy, Trajectory traj, uint64_t seed) {
  const LpBall& ball = traj.ball;
  if (policy.ball().dim() != ball.dim() || policy.ball().p() != ball.p() ||
      policy.ball().radius() != ball.radius()) {
    throw InvalidInput("policy configured for a different ball");
  }
  const int64_t n = traj.horizon;
  traj.noise_seed = seed;
  traj.actions.resize(n, ball.dim());
  traj.rewards.reserve(n);
  traj.instant_regrets.reserve(n);

  std::mt19937_64 noise_rng(DeriveSeed(seed, {kNoiseStream}));
  std::normal_distribution<double> standard_normal(0.0, 1.0);
  policy.Reset(DeriveSeed(seed, {kPolicyStream}));

  for (int64_t t = 0; t < n; ++t) {
    Vector x = policy.Act(t);
    const double noise = standard_normal(noise_rng);
    if (x.size() != ball.dim() || !IsFeasible(ball, x)) {
      Trajectory partial = traj;
      partial.actions.conservativeResize(t, ball.dim());
      std::ostringstream msg;
      msg << policy.name() << " played an infeasible action at round " << t;
      throw InfeasibleAction(
          msg.str(), std::make_shared<const Trajectory>(std::move(partial)));
    }
    const double mean = x.dot(traj.theta);
    const double reward = mean + noise;
    traj.actions.row(t) = x.transpose();
    traj.rewards.push_back(reward);
    traj.instant_regrets.push_back(traj.optimal_value - mean);
    policy.Update(x, reward);
  }
  return traj;
}

void Expect(std::istream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token != key) {
    throw InvalidInput("trajectory parse error: expected '" + key + "'");
  }
}

}  // namespace

double PlayRound(const LpBall& ball, const Vector& theta, const Vector& action,
                 double noise) {
  if (action.size() != ball.dim() || !IsFeasible(ball, action)) {
    throw InfeasibleAction("action outside the ball");
  }
  if (theta.size() != ball.dim()) throw InvalidInput("theta length mismatch");
  return action.dot(theta) + noise;
}

Trajectory RunEpisode(Policy& policy, const HardInstance& instance,
                      int64_t horizon, uint64_t seed) {
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  Trajectory traj{instance.ball(), instance.theta(), instance,
                  instance.optimal_value(), horizon, 0, {}, {}, {}};
  return RunEpisodeImpl(policy, std::move(traj), seed);
}

Trajectory RunEpisode(Policy& policy, const Vector& theta, int64_t horizon,
                      uint64_t seed) {
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  const LpBall& ball = policy.ball();
  const double optimal = ArgmaxLinear(ball, theta).value;
  Trajectory traj{ball, theta, std::nullopt, optimal, horizon, 0, {}, {}, {}};
  return RunEpisodeImpl(policy, std::move(traj), seed);
}

double PseudoRegret(const Trajectory& trajectory) {
  double total = 0.0;
  for (double r : trajectory.instant_regrets) total += r;
  return total;
}

void WriteTrajectory(std::ostream& out, const Trajectory& traj) {
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  const int d = traj.ball.dim();
  out << kTrajectoryMagic << '\n';
  out << "d " << d << '\n';
  out << "p " << num(traj.ball.p()) << '\n';
  out << "c " << num(traj.ball.radius()) << '\n';
  out << "horizon " << traj.horizon << '\n';
  out << "noise_seed " << traj.noise_seed << '\n';
  out << "optimal_value " << num(traj.optimal_value) << '\n';
  out << "theta";
  for (int i = 0; i < d; ++i) out << ' ' << num(traj.theta[i]);
  out << '\n';
  if (traj.instance) {
    out << "signs";
    for (int s : traj.instance->signs()) out << ' ' << s;
    out << '\n';
  }
  out << "rounds " << traj.rounds() << '\n';
  for (int64_t t = 0; t < traj.rounds(); ++t) {
    out << t + 1;
    for (int i = 0; i < d; ++i) out << ' ' << num(traj.actions(t, i));
    out << ' ' << num(traj.rewards[t]) << ' ' << num(traj.instant_regrets[t])
        << '\n';
  }
}

Trajectory ReadTrajectory(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryMagic) {
    throw InvalidInput("trajectory parse error: missing header");
  }
  int d = 0;
  double p = 0.0, c = 0.0, optimal = 0.0;
  int64_t horizon = 0, rounds = 0;
  uint64_t noise_seed = 0;
  Expect(in, "d");
  in >> d;
  Expect(in, "p");
  in >> p;
  Expect(in, "c");
  in >> c;
  Expect(in, "horizon");
  in >> horizon;
  Expect(in, "noise_seed");
  in >> noise_seed;
  Expect(in, "optimal_value");
  in >> optimal;
  if (!in || d < 1) throw InvalidInput("trajectory parse error: bad header");
  LpBall ball(d, p, c);
  Expect(in, "theta");
  Vector theta(d);
  for (int i = 0; i < d; ++i) in >> theta[i];

  std::optional<HardInstance> instance;
  std::string key;
  in >> key;
  if (key == "signs") {
    SignPattern signs(d);
    for (int i = 0; i < d; ++i) in >> signs[i];
    instance.emplace(HardFamily(ball, horizon), std::move(signs));
    in >> key;
  }
  if (key != "rounds") throw InvalidInput("trajectory parse error: 'rounds'");
  in >> rounds;
  if (!in || rounds < 0 || rounds > horizon) {
    throw InvalidInput("trajectory parse error: bad round count");
  }

  Trajectory traj{ball,       theta, std::move(instance), optimal, horizon,
                  noise_seed, {},    {},                  {}};
  traj.actions.resize(rounds, d);
  traj.rewards.resize(rounds);
  traj.instant_regrets.resize(rounds);
  for (int64_t t = 0; t < rounds; ++t) {
    int64_t index = 0;
    in >> index;
    for (int i = 0; i < d; ++i) in >> traj.actions(t, i);
    in >> traj.rewards[t] >> traj.instant_regrets[t];
    if (!in || index != t + 1) {
      throw InvalidInput("trajectory parse error at round " +
                         std::to_string(t + 1));
    }
  }
  return traj;
}

}  // namespace lpbandit
