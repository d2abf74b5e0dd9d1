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

#ifndef LPBANDIT_RNG_H_
#define LPBANDIT_RNG_H_

#include <cstdint>
#include <initializer_list>

namespace lpbandit {

// SplitMix64 finalizer.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based seed derivation: the seed for a task is a hash of the master
// seed and the task's coordinates, so no generator is shared between tasks
// and the result does not depend on execution order.
constexpr uint64_t DeriveSeed(uint64_t master,
                              std::initializer_list<uint64_t> path) {
  uint64_t h = Mix64(master);
  for (uint64_t component : path) h = Mix64(h ^ Mix64(component));
  return h;
}

// Stream tags used inside one episode.
inline constexpr uint64_t kNoiseStream = 0x6e6f697365ULL;
inline constexpr uint64_t kPolicyStream = 0x706f6c696379ULL;

}  // namespace lpbandit

#endif  // LPBANDIT_RNG_H_
