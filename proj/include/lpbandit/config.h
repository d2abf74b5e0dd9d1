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

#ifndef LPBANDIT_CONFIG_H_
#define LPBANDIT_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpbandit/policies.h"

namespace lpbandit {

// Flat key=value settings. Keys may carry a section prefix ("linucb.lambda").
using KeyValues = std::map<std::string, std::string>;

// Parses "key = value" lines; '#' starts a comment. Throws ConfigError on
// malformed lines or duplicate keys.
KeyValues ParseKeyValues(const std::string& text);
KeyValues ReadKeyValueFile(const std::string& path);

struct SignStrategy {
  // Full enumeration when true (dimension permitting), else `sample_count`
  // patterns drawn without replacement.
  bool all = true;
  uint64_t sample_count = 0;
};

// Full enumeration is used up to this dimension; beyond it "all" falls back
// to sampling `all_fallback_count` patterns.
inline constexpr int kEnumerateUpToDim = 12;

struct ExperimentConfig {
  std::vector<std::string> policies = {"linucb"};
  PolicyConfig policy;  // shared hyperparameters; name is overwritten per cell
  std::vector<int> d_values = {2};
  std::vector<int64_t> n_values = {256};
  std::vector<double> p_values = {2.0};
  std::vector<double> c_values = {1.0};
  SignStrategy signs;
  uint64_t all_fallback_count = 1024;
  int seeds = 2;
  uint64_t master_seed = 0;
  std::string out_dir;
  bool audit = true;
  bool dump_trajectories = false;
  int workers = 1;
  int64_t eig_stride = 0;
  // Seeds >= 2 is required only when a verdict is wanted.
  bool require_verdict = true;

  // Number of (policy, d, n, p, c) cells.
  size_t cell_count() const;
};

// Recognized keys: policy, d, n, p, c (comma lists), signs (all | sample:K),
// signs.fallback, seeds, master_seed, out, audit (on|off), trajectories
// (on|off), workers, eig_stride, etc.m, etc.lambda, linucb.lambda,
// linucb.delta, linucb.sigma, linucb.S, linucb.restarts, linucb.ascent
// (linearized|projected). Unknown keys throw ConfigError.
ExperimentConfig ConfigFromKeyValues(const KeyValues& values);

// Inverse of ConfigFromKeyValues for the keys that affect results (excludes
// out, workers). Used to derive the run id.
std::string CanonicalConfigString(const ExperimentConfig& config);

// Throws ConfigError for structural problems and InadmissibleRegime for the
// first grid tuple with d > (2 n c^2)^{p/2}.
void ValidateConfig(const ExperimentConfig& config);

SignStrategy ParseSignStrategy(const std::string& text);

}  // namespace lpbandit

#endif  // LPBANDIT_CONFIG_H_
