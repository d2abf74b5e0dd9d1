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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "lpbandit/instance.h"
#include "lpbandit/policies.h"

namespace lpbandit {
namespace {

Vector Vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

// Plays a point just outside the ball at a chosen round.
class EscapingPolicy : public Policy {
 public:
  EscapingPolicy(const LpBall& ball, int64_t escape_round)
      : Policy(ball), escape_round_(escape_round) {}
  std::string name() const override { return "escaping"; }

 protected:
  void DoReset(uint64_t) override {}
  Vector DoAct(int64_t t) override {
    Vector x = Vector::Zero(ball().dim());
    x[0] = t == escape_round_ ? 1.01 * ball().radius() : 0.5 * ball().radius();
    return x;
  }
  void DoUpdate(const Vector&, double) override {}

 private:
  int64_t escape_round_;
};

TEST(PlayRoundTest, Examples) {
  const LpBall ball(2, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(PlayRound(ball, Vec({1, 0}), Vec({1, 0}), 0.0), 1.0);
  EXPECT_DOUBLE_EQ(PlayRound(ball, Vec({0, 0}), Vec({0.3, 0.1}), 0.7), 0.7);
  EXPECT_NEAR(PlayRound(ball, Vec({0.1, 0.1}), Vec({0.5, 0.5}), -0.2), -0.1,
              1e-16);
  EXPECT_THROW(PlayRound(ball, Vec({1, 0}), Vec({1, 1}), 0.0), InfeasibleAction);
}

TEST(PlayRoundTest, AcceptsRoundOffOutsideTheBall) {
  const LpBall ball(2, 2.0, 1.0);
  EXPECT_NO_THROW(PlayRound(ball, Vec({1, 0}), Vec({1.0 + 1e-12, 0}), 0.0));
}

class ReferencePlayTest : public ::testing::Test {
 protected:
  ReferencePlayTest()
      : family_(LpBall(4, 2.0, 1.0), 100), instance_(family_, {1, -1, -1, 1}) {}

  double PerRound() const {
    return family_.delta() * 1.0 * std::pow(4.0, 1.0 - 1.0 / 2.0);
  }

  HardFamily family_;
  HardInstance instance_;
};

TEST_F(ReferencePlayTest, OracleHasZeroRegret) {
  FixedActionPolicy oracle(instance_.ball(), instance_.optimal_action(),
                           "oracle");
  const Trajectory traj = RunEpisode(oracle, instance_, 100, 1);
  EXPECT_TRUE(traj.complete());
  EXPECT_NEAR(PseudoRegret(traj), 0.0, 1e-12);
}

TEST_F(ReferencePlayTest, OriginForfeitsFullValue) {
  FixedActionPolicy origin(instance_.ball(), Vector::Zero(4), "origin");
  const Trajectory traj = RunEpisode(origin, instance_, 100, 1);
  // 100 * delta * 2 at 30 digits.
  EXPECT_NEAR(PseudoRegret(traj), 5.77350269189625764509148780502, 1e-12);
  EXPECT_NEAR(PseudoRegret(traj), 100 * PerRound(), 1e-12);
}

TEST_F(ReferencePlayTest, AntiOracleForfeitsTwice) {
  FixedActionPolicy anti(instance_.ball(), -instance_.optimal_action(),
                         "anti");
  const Trajectory traj = RunEpisode(anti, instance_, 100, 1);
  EXPECT_NEAR(PseudoRegret(traj), 200 * PerRound(), 1e-12);
}

TEST_F(ReferencePlayTest, RegretIgnoresNoise) {
  UniformVertexPolicy uniform(instance_.ball());
  const Trajectory traj = RunEpisode(uniform, instance_, 100, 9);
  double direct = 0.0;
  for (int64_t t = 0; t < traj.rounds(); ++t) {
    direct += instance_.optimal_value() -
              traj.actions.row(t).dot(instance_.theta().transpose());
  }
  EXPECT_NEAR(PseudoRegret(traj), direct, 1e-12);
  for (double r : traj.instant_regrets) EXPECT_GE(r, -1e-9);
}

TEST_F(ReferencePlayTest, SplitRegretIsAdditive) {
  UniformVertexPolicy uniform(instance_.ball());
  const Trajectory traj = RunEpisode(uniform, instance_, 100, 4);
  double first = 0.0, second = 0.0;
  for (int t = 0; t < 50; ++t) first += traj.instant_regrets[t];
  for (int t = 50; t < 100; ++t) second += traj.instant_regrets[t];
  EXPECT_NEAR(first + second, PseudoRegret(traj), 1e-12);
}

TEST_F(ReferencePlayTest, SameSeedIsBitIdentical) {
  LinUcbPolicy a(instance_.ball(), LinUcbConfig{});
  LinUcbPolicy b(instance_.ball(), LinUcbConfig{});
  const Trajectory x = RunEpisode(a, instance_, 100, 42);
  const Trajectory y = RunEpisode(b, instance_, 100, 42);
  EXPECT_EQ(x.actions, y.actions);
  EXPECT_EQ(x.rewards, y.rewards);
  const Trajectory z = RunEpisode(a, instance_, 100, 43);
  EXPECT_NE(x.rewards, z.rewards);
}

TEST_F(ReferencePlayTest, InfeasibleActionCarriesPartialTrajectory) {
  EscapingPolicy escaping(instance_.ball(), 7);
  try {
    RunEpisode(escaping, instance_, 100, 1);
    FAIL() << "expected InfeasibleAction";
  } catch (const InfeasibleAction& e) {
    ASSERT_NE(e.partial(), nullptr);
    EXPECT_EQ(e.partial()->rounds(), 7);
    EXPECT_EQ(e.partial()->actions.rows(), 7);
    EXPECT_FALSE(e.partial()->complete());
  }
}

TEST(RunEpisodeTest, FreePlayUsesGeometryOptimum) {
  const LpBall ball(3, 3.0, 2.0);
  const Vector theta = Vec({0.3, -0.1, 0.2});
  FixedActionPolicy best(ball, ArgmaxLinear(ball, theta).point, "best");
  const Trajectory traj = RunEpisode(best, theta, 50, 0);
  EXPECT_FALSE(traj.instance.has_value());
  EXPECT_NEAR(PseudoRegret(traj), 0.0, 1e-12);
}

TEST(RunEpisodeTest, RejectsPolicyForAnotherBall) {
  const HardFamily family(LpBall(2, 2.0, 1.0), 16);
  const HardInstance inst(family, {1, 1});
  UniformVertexPolicy other(LpBall(2, 3.0, 1.0));
  EXPECT_THROW(RunEpisode(other, inst, 16, 0), InvalidInput);
}

TEST(TrajectoryIoTest, RoundTripIsExact) {
  const HardFamily family(LpBall(3, 1.5, 0.7), 64);
  const HardInstance inst(family, {-1, 1, -1});
  LinUcbPolicy policy(inst.ball(), LinUcbConfig{});
  const Trajectory traj = RunEpisode(policy, inst, 64, 11);
  std::stringstream buffer;
  WriteTrajectory(buffer, traj);
  const Trajectory back = ReadTrajectory(buffer);
  EXPECT_EQ(back.actions, traj.actions);
  EXPECT_EQ(back.rewards, traj.rewards);
  EXPECT_EQ(back.instant_regrets, traj.instant_regrets);
  EXPECT_EQ(back.theta, traj.theta);
  EXPECT_EQ(back.noise_seed, traj.noise_seed);
  ASSERT_TRUE(back.instance.has_value());
  EXPECT_EQ(back.instance->signs(), inst.signs());
  std::stringstream again;
  WriteTrajectory(again, back);
  EXPECT_EQ(again.str(), buffer.str());
}

TEST(TrajectoryIoTest, RejectsGarbage) {
  std::stringstream bad("not a trajectory\n");
  EXPECT_THROW(ReadTrajectory(bad), InvalidInput);
  std::stringstream truncated(
      "# lpbandit trajectory v1\nd 1\np 2\nc 1\nhorizon 4\nnoise_seed 0\n"
      "optimal_value 1\ntheta 1\nrounds 2\n1 0.5 0.1 0.5\n");
  EXPECT_THROW(ReadTrajectory(truncated), InvalidInput);
}

}  // namespace
}  // namespace lpbandit
