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


#include "lpbandit/config.h"

#include <gtest/gtest.h>

#include "lpbandit/errors.h"
#include "lpbandit/instance.h"

namespace lpbandit {
namespace {

TEST(ParseKeyValuesTest, TrimsAndSkipsComments) {
  const KeyValues kv = ParseKeyValues(
      "# header\n"
      "policy = etc, linucb   # two policies\n"
      "\n"
      "  d=2,4\n"
      "linucb.lambda =0.5\n");
  ASSERT_EQ(kv.size(), 3u);
  EXPECT_EQ(kv.at("policy"), "etc, linucb");
  EXPECT_EQ(kv.at("d"), "2,4");
  EXPECT_EQ(kv.at("linucb.lambda"), "0.5");
}

TEST(ParseKeyValuesTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseKeyValues("just words\n"), ConfigError);
  EXPECT_THROW(ParseKeyValues("= 3\n"), ConfigError);
  EXPECT_THROW(ParseKeyValues("d = 2\nd = 3\n"), ConfigError);
  EXPECT_THROW(ReadKeyValueFile("/nonexistent/lpbandit.cfg"), ConfigError);
}

TEST(ConfigFromKeyValuesTest, ReadsEveryKey) {
  const ExperimentConfig config = ConfigFromKeyValues(ParseKeyValues(
      "policy = uniform,etc\n"
      "d = 2, 3\n"
      "n = 64,128\n"
      "p = 1.5,4\n"
      "c = 0.5\n"
      "signs = sample:3\n"
      "signs.fallback = 99\n"
      "seeds = 5\n"
      "master_seed = 42\n"
      "out = /tmp/x\n"
      "audit = off\n"
      "trajectories = on\n"
      "workers = 3\n"
      "eig_stride = 7\n"
      "etc.m = 20\n"
      "etc.lambda = 0.01\n"
      "linucb.lambda = 2\n"
      "linucb.delta = 0.05\n"
      "linucb.sigma = 0.5\n"
      "linucb.S = 1.25\n"
      "linucb.restarts = 3\n"
      "linucb.ascent = projected\n"));
  EXPECT_EQ(config.policies, (std::vector<std::string>{"uniform", "etc"}));
  EXPECT_EQ(config.d_values, (std::vector<int>{2, 3}));
  EXPECT_EQ(config.n_values, (std::vector<int64_t>{64, 128}));
  EXPECT_EQ(config.p_values, (std::vector<double>{1.5, 4.0}));
  EXPECT_EQ(config.c_values, (std::vector<double>{0.5}));
  EXPECT_FALSE(config.signs.all);
  EXPECT_EQ(config.signs.sample_count, 3u);
  EXPECT_EQ(config.all_fallback_count, 99u);
  EXPECT_EQ(config.seeds, 5);
  EXPECT_EQ(config.master_seed, 42u);
  EXPECT_EQ(config.out_dir, "/tmp/x");
  EXPECT_FALSE(config.audit);
  EXPECT_TRUE(config.dump_trajectories);
  EXPECT_EQ(config.workers, 3);
  EXPECT_EQ(config.eig_stride, 7);
  EXPECT_EQ(config.policy.etc_m, 20);
  EXPECT_EQ(config.policy.etc_lambda, 0.01);
  EXPECT_EQ(config.policy.linucb_lambda, 2.0);
  EXPECT_EQ(config.policy.linucb_delta, 0.05);
  EXPECT_EQ(config.policy.linucb_sigma, 0.5);
  EXPECT_EQ(config.policy.linucb_theta_norm, 1.25);
  EXPECT_EQ(config.policy.linucb_restarts, 3);
  EXPECT_EQ(config.policy.linucb_ascent, AscentStep::kProjected);
  EXPECT_EQ(config.cell_count(), 2u * 2 * 2 * 2 * 1);
}

TEST(ConfigFromKeyValuesTest, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(ConfigFromKeyValues({{"horizon", "10"}}), ConfigError);
  EXPECT_THROW(ConfigFromKeyValues({{"d", "two"}}), ConfigError);
  EXPECT_THROW(ConfigFromKeyValues({{"p", "1.5x"}}), ConfigError);
  EXPECT_THROW(ConfigFromKeyValues({{"audit", "maybe"}}), ConfigError);
  EXPECT_THROW(ConfigFromKeyValues({{"master_seed", "-1"}}), ConfigError);
  EXPECT_THROW(ConfigFromKeyValues({{"linucb.ascent", "newton"}}),
               ConfigError);
}

TEST(SignStrategyTest, Parses) {
  EXPECT_TRUE(ParseSignStrategy("all").all);
  const SignStrategy sampled = ParseSignStrategy("sample:16");
  EXPECT_FALSE(sampled.all);
  EXPECT_EQ(sampled.sample_count, 16u);
  EXPECT_THROW(ParseSignStrategy("sample:0"), ConfigError);
  EXPECT_THROW(ParseSignStrategy("some"), ConfigError);
}

TEST(CanonicalConfigStringTest, IgnoresOutputAndWorkers) {
  ExperimentConfig a;
  ExperimentConfig b;
  b.out_dir = "/elsewhere";
  b.workers = 8;
  EXPECT_EQ(CanonicalConfigString(a), CanonicalConfigString(b));
  b.master_seed = 1;
  EXPECT_NE(CanonicalConfigString(a), CanonicalConfigString(b));
}

TEST(CanonicalConfigStringTest, RoundTripsThroughTheParser) {
  ExperimentConfig config = ConfigFromKeyValues(ParseKeyValues(
      "policy = etc\nd = 3\nn = 100\np = 1.7\nc = 0.3\nsigns = sample:2\n"
      "linucb.S = 0.1\n"));
  const std::string text = CanonicalConfigString(config);
  EXPECT_EQ(CanonicalConfigString(ConfigFromKeyValues(ParseKeyValues(text))),
            text);
}

TEST(ValidateConfigTest, StructuralErrors) {
  ExperimentConfig config;
  EXPECT_NO_THROW(ValidateConfig(config));

  ExperimentConfig bad = config;
  bad.policies = {"thompson"};
  EXPECT_THROW(ValidateConfig(bad), ConfigError);
  bad = config;
  bad.seeds = 1;
  EXPECT_THROW(ValidateConfig(bad), ConfigError);
  bad.require_verdict = false;
  EXPECT_NO_THROW(ValidateConfig(bad));
  bad = config;
  bad.p_values = {1.0};
  EXPECT_THROW(ValidateConfig(bad), ConfigError);
  bad = config;
  bad.c_values = {0.0};
  EXPECT_THROW(ValidateConfig(bad), ConfigError);
  bad = config;
  bad.d_values = {};
  EXPECT_THROW(ValidateConfig(bad), ConfigError);
  bad = config;
  bad.workers = 0;
  EXPECT_THROW(ValidateConfig(bad), ConfigError);
}

TEST(ValidateConfigTest, InadmissibleTupleIsItsOwnError) {
  ExperimentConfig config;
  // (2 * 100 * 0.01)^{1} = 2 < 10.
  config.d_values = {10};
  config.n_values = {100};
  config.c_values = {0.1};
  EXPECT_THROW(ValidateConfig(config), InadmissibleRegime);
}

}  // namespace
}  // namespace lpbandit
