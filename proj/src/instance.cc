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
#include <sstream>
#include <unordered_set>
#include <utility>

namespace lpbandit {

std::string AdmissibilityReport::Describe() const {
  std::ostringstream out;
  out.precision(17);
  out << "d=" << d << " n=" << n << " p=" << p << " c=" << c
      << ": proof condition d <= (2 n c^2)^(p/2) = " << proof_limit << " is "
      << (proof_condition ? "met" : "violated")
      << "; statement condition d <= (2 c n^2)^(p/2) = " << statement_limit
      << " is " << (statement_condition ? "met" : "violated");
  return out.str();
}

AdmissibilityReport Admissible(int d, int64_t n, double p, double c) {
  if (d < 1 || n < 1 || !(p > 0.0) || !(c > 0.0)) {
    throw InvalidInput("admissibility requires positive d, n, p, c");
  }
  AdmissibilityReport report;
  report.d = d;
  report.n = n;
  report.p = p;
  report.c = c;
  const double nd = static_cast<double>(n);
  report.proof_limit = std::pow(2.0 * nd * c * c, p / 2.0);
  report.statement_limit = std::pow(2.0 * c * nd * nd, p / 2.0);
  report.proof_condition = d <= report.proof_limit;
  report.statement_condition = d <= report.statement_limit;
  return report;
}

double DeltaGap(int d, int64_t n, double p, double c) {
  const AdmissibilityReport report = Admissible(d, n, p, c);
  if (!report.admissible()) throw InadmissibleRegime(report);
  return std::pow(static_cast<double>(d), 1.0 / p) /
         (4.0 * std::numbers::sqrt3 * c * std::sqrt(static_cast<double>(n)));
}

double MinimaxLowerBound(int d, int64_t n) {
  if (d < 1 || n < 1) throw InvalidInput("bound requires positive d and n");
  return d * std::sqrt(static_cast<double>(n)) / (16.0 * std::numbers::sqrt3);
}

HardFamily::HardFamily(const LpBall& ball, int64_t horizon)
    : ball_(ball),
      horizon_(horizon),
      delta_(DeltaGap(ball.dim(), horizon, ball.p(), ball.radius())) {}

double HardFamily::optimal_value() const {
  const double d = ball_.dim();
  return delta_ * ball_.radius() * std::pow(d, 1.0 - 1.0 / ball_.p());
}

HardInstance::HardInstance(const HardFamily& family, SignPattern signs)
    : family_(family), signs_(std::move(signs)) {
  ValidateSigns(family_.ball(), signs_);
  theta_.resize(family_.ball().dim());
  for (int i = 0; i < theta_.size(); ++i) theta_[i] = family_.delta() * signs_[i];
}

HardInstance MakeInstance(const HardFamily& family, SignPattern signs) {
  return HardInstance(family, std::move(signs));
}

HardInstance NeighborInstance(const HardInstance& instance, int i) {
  if (i < 0 || i >= instance.ball().dim()) {
    throw InvalidInput("coordinate index " + std::to_string(i) +
                       " out of range");
  }
  SignPattern flipped = instance.signs();
  flipped[i] = -flipped[i];
  return HardInstance(instance.family(), std::move(flipped));
}

SignPattern SignPatternFromId(int d, uint64_t id) {
  if (d < 1 || d > kMaxHardInstanceDim) {
    throw InvalidInput("sign pattern dimension out of range");
  }
  SignPattern signs(d);
  for (int i = 0; i < d; ++i) signs[i] = (id >> i) & 1u ? -1 : 1;
  return signs;
}

uint64_t SignPatternId(std::span<const int> signs) {
  if (signs.size() > static_cast<size_t>(kMaxHardInstanceDim)) {
    throw InvalidInput("sign pattern too long for a 64-bit id");
  }
  uint64_t id = 0;
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == -1) id |= uint64_t{1} << i;
  }
  return id;
}

std::vector<uint64_t> EnumerateSignIds(int d) {
  if (d < 1 || d > kMaxEnumerationDim) {
    throw InvalidInput("full sign enumeration supports 1 <= d <= " +
                       std::to_string(kMaxEnumerationDim));
  }
  std::vector<uint64_t> ids(uint64_t{1} << d);
  for (uint64_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

std::vector<uint64_t> SampleSignIds(int d, uint64_t count,
                                    std::mt19937_64& rng) {
  if (d < 1 || d > kMaxHardInstanceDim) {
    throw InvalidInput("sign pattern dimension out of range");
  }
  const uint64_t total = d >= 64 ? ~uint64_t{0} : (uint64_t{1} << d);
  if (count >= total) return EnumerateSignIds(d);

  std::vector<uint64_t> ids;
  ids.reserve(count);
  if (count * 2 > total) {
    // Dense regime: partial Fisher-Yates over the full id range.
    std::vector<uint64_t> all = EnumerateSignIds(d);
    for (uint64_t i = 0; i < count; ++i) {
      std::uniform_int_distribution<uint64_t> pick(i, total - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    ids.assign(all.begin(), all.begin() + static_cast<long>(count));
  } else {
    std::unordered_set<uint64_t> seen;
    std::uniform_int_distribution<uint64_t> pick(0, total - 1);
    while (ids.size() < count) {
      const uint64_t id = pick(rng);
      if (seen.insert(id).second) ids.push_back(id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace lpbandit
