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


#include "lpbandit/instance.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

namespace lpbandit {
namespace {

double RelErr(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(DeltaGapTest, Examples) {
  // Reference values evaluated at 30 significant digits.
  EXPECT_LT(RelErr(DeltaGap(4, 100, 2.0, 1.0),
                   0.0288675134594812882254574390251),
            1e-14);
  EXPECT_LT(RelErr(DeltaGap(1, 1, 2.0, 1.0), 0.144337567297406441127287195125),
            1e-14);
  EXPECT_LT(RelErr(DeltaGap(8, 64, 3.0, 2.0),
                   0.0180421959121758051409108993907),
            1e-14);
}

TEST(DeltaGapTest, NormIdentity) {
  for (int d : {1, 2, 3, 5, 8, 16}) {
    for (int64_t n : {16, 100, 1024, 65536}) {
      for (double p : {1.5, 2.0, 3.0, 7.5}) {
        for (double c : {0.5, 1.0, 3.0}) {
          if (!Admissible(d, n, p, c).admissible()) continue;
          const double delta = DeltaGap(d, n, p, c);
          const double lhs = d * std::pow(delta, p);
          const double rhs = d * d *
                             std::pow(4.0 * std::numbers::sqrt3 * c, -p) *
                             std::pow(static_cast<double>(n), -p / 2.0);
          EXPECT_LT(RelErr(lhs, rhs), 1e-12) << d << " " << n << " " << p;
        }
      }
    }
  }
}

TEST(DeltaGapTest, AveragingIdentityMatchesBound) {
  for (int d : {1, 2, 4, 8}) {
    for (int64_t n : {4, 100, 1024, 16384}) {
      for (double p : {1.5, 2.0, 4.0}) {
        for (double c : {0.5, 1.0, 2.0}) {
          if (!Admissible(d, n, p, c).admissible()) continue;
          const double delta = DeltaGap(d, n, p, c);
          const double lhs = n * c * delta * std::pow(d, 1.0 - 1.0 / p) / 4.0;
          EXPECT_LT(RelErr(lhs, MinimaxLowerBound(d, n)), 1e-12);
        }
      }
    }
  }
}

TEST(AdmissibleTest, Examples) {
  const AdmissibilityReport a = Admissible(4, 100, 2.0, 1.0);
  EXPECT_TRUE(a.admissible());
  EXPECT_DOUBLE_EQ(a.proof_limit, 200.0);
  EXPECT_TRUE(Admissible(1, 1, 2.0, 1.0).admissible());
  const AdmissibilityReport b = Admissible(1000, 2, 2.0, 1.0);
  EXPECT_FALSE(b.admissible());
  EXPECT_DOUBLE_EQ(b.proof_limit, 4.0);
  EXPECT_DOUBLE_EQ(b.statement_limit, 8.0);
}

TEST(AdmissibleTest, StatementVariantReportedButNotEnforced) {
  // c = 0.1, n = 100, p = 2: proof limit 2 n c^2 = 2, statement limit
  // 2 c n^2 = 2000.
  const AdmissibilityReport r = Admissible(10, 100, 2.0, 0.1);
  EXPECT_NEAR(r.proof_limit, 2.0, 1e-12);
  EXPECT_NEAR(r.statement_limit, 2000.0, 1e-9);
  EXPECT_FALSE(r.proof_condition);
  EXPECT_TRUE(r.statement_condition);
  EXPECT_FALSE(r.admissible());
  const std::string text = r.Describe();
  EXPECT_NE(text.find("proof condition"), std::string::npos);
  EXPECT_NE(text.find("statement condition"), std::string::npos);
}

TEST(DeltaGapTest, RejectsInadmissibleWithBothConditions) {
  try {
    DeltaGap(1000, 2, 2.0, 1.0);
    FAIL() << "expected InadmissibleRegime";
  } catch (const InadmissibleRegime& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInadmissibleRegime);
    EXPECT_DOUBLE_EQ(e.report().proof_limit, 4.0);
    EXPECT_DOUBLE_EQ(e.report().statement_limit, 8.0);
    const std::string what = e.what();
    EXPECT_NE(what.find("(2 n c^2)^(p/2)"), std::string::npos) << what;
    EXPECT_NE(what.find("(2 c n^2)^(p/2)"), std::string::npos) << what;
  }
}

TEST(MinimaxLowerBoundTest, Examples) {
  EXPECT_LT(RelErr(MinimaxLowerBound(4, 100), 1.44337567297406441127287195125),
            1e-14);
  EXPECT_LT(RelErr(MinimaxLowerBound(1, 1), 0.0360843918243516102818217987814),
            1e-14);
  EXPECT_LT(RelErr(MinimaxLowerBound(8, 100), 2 * MinimaxLowerBound(4, 100)),
            1e-15);
  EXPECT_LT(RelErr(MinimaxLowerBound(4, 400), 2 * MinimaxLowerBound(4, 100)),
            1e-15);
}

TEST(HardInstanceTest, ThetaAndOptimum) {
  const HardFamily family(LpBall(2, 2.0, 1.0), 100);
  const HardInstance inst = MakeInstance(family, {1, -1});
  EXPECT_LT(RelErr(family.delta(), 0.0204124145231931508183107006225), 1e-14);
  EXPECT_DOUBLE_EQ(inst.theta()[0], family.delta());
  EXPECT_DOUBLE_EQ(inst.theta()[1], -family.delta());
  EXPECT_EQ(inst.optimal_action(), VertexAction(inst.ball(), inst.signs()));
}

TEST(HardInstanceTest, OptimalValueMatchesGeometryForEveryPattern) {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const HardFamily family(LpBall(4, p, 1.5), 1024);
    for (uint64_t id : EnumerateSignIds(4)) {
      const HardInstance inst(family, SignPatternFromId(4, id));
      const double geometric = ArgmaxLinear(inst.ball(), inst.theta()).value;
      EXPECT_LT(RelErr(geometric, inst.optimal_value()), 1e-12);
      EXPECT_LT(RelErr(inst.optimal_value(),
                       family.delta() * 1.5 * std::pow(4.0, 1.0 - 1.0 / p)),
                1e-12);
    }
  }
}

TEST(HardInstanceTest, RejectsBadSigns) {
  const HardFamily family(LpBall(2, 2.0, 1.0), 100);
  EXPECT_THROW(MakeInstance(family, {1}), InvalidInput);
  EXPECT_THROW(MakeInstance(family, {1, 2}), InvalidInput);
}

TEST(HardFamilyTest, RejectsInadmissible) {
  EXPECT_THROW(HardFamily(LpBall(1000, 2.0, 1.0), 2), InadmissibleRegime);
}

TEST(NeighborInstanceTest, FlipsOneCoordinate) {
  const HardFamily family(LpBall(3, 2.0, 1.0), 64);
  const HardInstance inst(family, {1, 1, -1});
  const HardInstance flipped = NeighborInstance(inst, 0);
  EXPECT_EQ(flipped.signs(), (SignPattern{-1, 1, -1}));
  const Vector diff = inst.theta() - flipped.theta();
  EXPECT_DOUBLE_EQ(diff[0], 2.0 * family.delta());
  EXPECT_EQ(diff[1], 0.0);
  EXPECT_EQ(diff[2], 0.0);
  EXPECT_EQ(NeighborInstance(flipped, 0).theta(), inst.theta());
  EXPECT_THROW(NeighborInstance(inst, 3), InvalidInput);
  EXPECT_THROW(NeighborInstance(inst, -1), InvalidInput);
}

TEST(SignIdTest, RoundTripAndEnumeration) {
  for (uint64_t id = 0; id < 32; ++id) {
    EXPECT_EQ(SignPatternId(SignPatternFromId(5, id)), id);
  }
  EXPECT_EQ(SignPatternFromId(3, 0), (SignPattern{1, 1, 1}));
  EXPECT_EQ(SignPatternFromId(3, 1), (SignPattern{-1, 1, 1}));
  const std::vector<uint64_t> all = EnumerateSignIds(4);
  ASSERT_EQ(all.size(), 16u);
  for (uint64_t k = 0; k < 16; ++k) EXPECT_EQ(all[k], k);
  EXPECT_THROW(EnumerateSignIds(kMaxEnumerationDim + 1), InvalidInput);
}

TEST(SignIdTest, SamplingWithoutReplacement) {
  std::mt19937_64 rng(3);
  const std::vector<uint64_t> ids = SampleSignIds(10, 100, rng);
  ASSERT_EQ(ids.size(), 100u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::set<uint64_t>(ids.begin(), ids.end()).size(), 100u);
  for (uint64_t id : ids) EXPECT_LT(id, 1024u);
  EXPECT_EQ(SampleSignIds(3, 8, rng), EnumerateSignIds(3));
  EXPECT_EQ(SampleSignIds(3, 50, rng), EnumerateSignIds(3));
  // Large dimensions sample without enumerating.
  const std::vector<uint64_t> wide = SampleSignIds(40, 16, rng);
  EXPECT_EQ(std::set<uint64_t>(wide.begin(), wide.end()).size(), 16u);
}

}  // namespace
}  // namespace lpbandit
