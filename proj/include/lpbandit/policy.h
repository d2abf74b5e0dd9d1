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

#ifndef LPBANDIT_POLICY_H_
#define LPBANDIT_POLICY_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lpbandit/geometry.h"

namespace lpbandit {

// A bandit policy on a fixed ball. One instance is owned by one episode at a
// time; Reset starts a new episode. Within an episode the caller alternates
// Act and Update, exactly once each per round.
class Policy {
 public:
  explicit Policy(const LpBall& ball) : ball_(ball) {}
  virtual ~Policy() = default;

  Policy(const Policy&) = delete;
  Policy& operator=(const Policy&) = delete;

  const LpBall& ball() const { return ball_; }
  virtual std::string name() const = 0;

  // Clears all learned state. `seed` drives any internal randomization.
  void Reset(uint64_t seed) {
    awaiting_update_ = false;
    DoReset(seed);
  }

  // Action for round t (0-based).
  Vector Act(int64_t t) {
    if (awaiting_update_) throw std::logic_error("Act called twice without Update");
    awaiting_update_ = true;
    return DoAct(t);
  }

  void Update(const Vector& action, double reward) {
    if (!awaiting_update_) throw std::logic_error("Update called without Act");
    awaiting_update_ = false;
    DoUpdate(action, reward);
  }

 protected:
  virtual void DoReset(uint64_t seed) = 0;
  virtual Vector DoAct(int64_t t) = 0;
  virtual void DoUpdate(const Vector& action, double reward) = 0;

 private:
  LpBall ball_;
  bool awaiting_update_ = false;
};

}  // namespace lpbandit

#endif  // LPBANDIT_POLICY_H_
