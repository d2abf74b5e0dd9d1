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

#ifndef LPBANDIT_INSTANCE_H_
#define LPBANDIT_INSTANCE_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lpbandit/errors.h"
#include "lpbandit/geometry.h"

// The sign-hypercube family of hard instances theta in {-delta, +delta}^d on
// an L^p ball, with the gap delta = d^{1/p} / (4 sqrt(3) c sqrt(n)).

namespace lpbandit {

// Both forms of the dimension condition. `proof_limit` = (2 n c^2)^{p/2} is
// the one enforced; `statement_limit` = (2 c n^2)^{p/2} is reported only.
struct AdmissibilityReport {
  int d = 0;
  int64_t n = 0;
  double p = 0.0;
  double c = 0.0;
  double proof_limit = 0.0;
  double statement_limit = 0.0;
  bool proof_condition = false;
  bool statement_condition = false;

  bool admissible() const { return proof_condition; }
  std::string Describe() const;
};

class InadmissibleRegime : public Error {
 public:
  explicit InadmissibleRegime(const AdmissibilityReport& report)
      : Error(ErrorCode::kInadmissibleRegime, report.Describe()),
        report_(report) {}

  const AdmissibilityReport& report() const { return report_; }

 private:
  AdmissibilityReport report_;
};

AdmissibilityReport Admissible(int d, int64_t n, double p, double c);

// Throws InadmissibleRegime when d > (2 n c^2)^{p/2}.
double DeltaGap(int d, int64_t n, double p, double c);

// d sqrt(n) / (16 sqrt(3)); p and c cancel out of the final bound.
double MinimaxLowerBound(int d, int64_t n);

// Upper limit on d for which sign patterns are addressable by a 64-bit id.
inline constexpr int kMaxHardInstanceDim = 62;

class HardFamily {
 public:
  // Validates admissibility and computes the gap.
  HardFamily(const LpBall& ball, int64_t horizon);

  const LpBall& ball() const { return ball_; }
  int64_t horizon() const { return horizon_; }
  double delta() const { return delta_; }

  // Per-round optimal reward delta * c * d^{1 - 1/p} shared by every member.
  double optimal_value() const;

 private:
  LpBall ball_;
  int64_t horizon_;
  double delta_;
};

class HardInstance {
 public:
  HardInstance(const HardFamily& family, SignPattern signs);

  const HardFamily& family() const { return family_; }
  const LpBall& ball() const { return family_.ball(); }
  const SignPattern& signs() const { return signs_; }
  const Vector& theta() const { return theta_; }

  // The vertex (c/d^{1/p}) * signs.
  Vector optimal_action() const { return VertexAction(ball(), signs_); }
  double optimal_value() const { return family_.optimal_value(); }

 private:
  HardFamily family_;
  SignPattern signs_;
  Vector theta_;
};

HardInstance MakeInstance(const HardFamily& family, SignPattern signs);

// Flips coordinate i. Throws InvalidInput for i outside [0, d).
HardInstance NeighborInstance(const HardInstance& instance, int i);

// Sign pattern ids: bit i set means s_i = -1, so id 0 is all-plus.
SignPattern SignPatternFromId(int d, uint64_t id);
uint64_t SignPatternId(std::span<const int> signs);

// All 2^d ids in increasing order. Throws InvalidInput when d exceeds
// kMaxEnumerationDim.
inline constexpr int kMaxEnumerationDim = 20;
std::vector<uint64_t> EnumerateSignIds(int d);

// `count` distinct ids drawn uniformly without replacement, returned sorted.
// When count >= 2^d this is the full enumeration.
std::vector<uint64_t> SampleSignIds(int d, uint64_t count, std::mt19937_64& rng);

}  // namespace lpbandit

#endif  // LPBANDIT_INSTANCE_H_
