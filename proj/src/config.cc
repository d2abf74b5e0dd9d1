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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "lpbandit/errors.h"
#include "lpbandit/instance.h"

namespace lpbandit {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double ParseDouble(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || errno != 0) {
    throw ConfigError(key + ": '" + text + "' is not a number");
  }
  return v;
}

int64_t ParseInt(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno != 0) {
    throw ConfigError(key + ": '" + text + "' is not an integer");
  }
  return v;
}

uint64_t ParseUnsigned(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || text[0] == '-' || *end != '\0' || errno != 0) {
    throw ConfigError(key + ": '" + text + "' is not a nonnegative integer");
  }
  return v;
}

bool ParseSwitch(const std::string& key, const std::string& text) {
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  throw ConfigError(key + ": expected on or off, got '" + text + "'");
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T, typename Format>
std::string JoinList(const std::vector<T>& values, Format format) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format(values[i]);
  }
  return out;
}

}  // namespace

KeyValues ParseKeyValues(const std::string& text) {
  KeyValues values;
  std::stringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected key=value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_number) + ": empty key");
    }
    if (!values.emplace(key, value).second) {
      throw ConfigError("duplicate key '" + key + "'");
    }
  }
  return values;
}

KeyValues ReadKeyValueFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseKeyValues(buffer.str());
}

SignStrategy ParseSignStrategy(const std::string& text) {
  SignStrategy strategy;
  if (text == "all") return strategy;
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    strategy.all = false;
    strategy.sample_count = ParseUnsigned("signs", text.substr(prefix.size()));
    if (strategy.sample_count == 0) {
      throw ConfigError("signs: sample count must be positive");
    }
    return strategy;
  }
  throw ConfigError("signs: expected 'all' or 'sample:K', got '" + text + "'");
}

size_t ExperimentConfig::cell_count() const {
  return policies.size() * d_values.size() * n_values.size() *
         p_values.size() * c_values.size();
}

ExperimentConfig ConfigFromKeyValues(const KeyValues& values) {
  ExperimentConfig config;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"policy",
       [&](const std::string&, const std::string& v) {
         config.policies = SplitList(v);
       }},
      {"d",
       [&](const std::string& k, const std::string& v) {
         config.d_values.clear();
         for (const auto& item : SplitList(v)) {
           config.d_values.push_back(static_cast<int>(ParseInt(k, item)));
         }
       }},
      {"n",
       [&](const std::string& k, const std::string& v) {
         config.n_values.clear();
         for (const auto& item : SplitList(v)) {
           config.n_values.push_back(ParseInt(k, item));
         }
       }},
      {"p",
       [&](const std::string& k, const std::string& v) {
         config.p_values.clear();
         for (const auto& item : SplitList(v)) {
           config.p_values.push_back(ParseDouble(k, item));
         }
       }},
      {"c",
       [&](const std::string& k, const std::string& v) {
         config.c_values.clear();
         for (const auto& item : SplitList(v)) {
           config.c_values.push_back(ParseDouble(k, item));
         }
       }},
      {"signs",
       [&](const std::string&, const std::string& v) {
         config.signs = ParseSignStrategy(v);
       }},
      {"signs.fallback",
       [&](const std::string& k, const std::string& v) {
         config.all_fallback_count = ParseUnsigned(k, v);
       }},
      {"seeds",
       [&](const std::string& k, const std::string& v) {
         config.seeds = static_cast<int>(ParseInt(k, v));
       }},
      {"master_seed",
       [&](const std::string& k, const std::string& v) {
         config.master_seed = ParseUnsigned(k, v);
       }},
      {"out", [&](const std::string&,
                  const std::string& v) { config.out_dir = v; }},
      {"audit",
       [&](const std::string& k, const std::string& v) {
         config.audit = ParseSwitch(k, v);
       }},
      {"trajectories",
       [&](const std::string& k, const std::string& v) {
         config.dump_trajectories = ParseSwitch(k, v);
       }},
      {"workers",
       [&](const std::string& k, const std::string& v) {
         config.workers = static_cast<int>(ParseInt(k, v));
       }},
      {"eig_stride",
       [&](const std::string& k, const std::string& v) {
         config.eig_stride = ParseInt(k, v);
       }},
      {"etc.m",
       [&](const std::string& k, const std::string& v) {
         config.policy.etc_m = ParseInt(k, v);
       }},
      {"etc.lambda",
       [&](const std::string& k, const std::string& v) {
         config.policy.etc_lambda = ParseDouble(k, v);
       }},
      {"linucb.lambda",
       [&](const std::string& k, const std::string& v) {
         config.policy.linucb_lambda = ParseDouble(k, v);
       }},
      {"linucb.delta",
       [&](const std::string& k, const std::string& v) {
         config.policy.linucb_delta = ParseDouble(k, v);
       }},
      {"linucb.sigma",
       [&](const std::string& k, const std::string& v) {
         config.policy.linucb_sigma = ParseDouble(k, v);
       }},
      {"linucb.S",
       [&](const std::string& k, const std::string& v) {
         config.policy.linucb_theta_norm = ParseDouble(k, v);
       }},
      {"linucb.restarts",
       [&](const std::string& k, const std::string& v) {
         config.policy.linucb_restarts = static_cast<int>(ParseInt(k, v));
       }},
      {"linucb.ascent",
       [&](const std::string& k, const std::string& v) {
         if (v == "linearized") {
           config.policy.linucb_ascent = AscentStep::kLinearized;
         } else if (v == "projected") {
           config.policy.linucb_ascent = AscentStep::kProjected;
         } else {
           throw ConfigError(k + ": expected linearized or projected");
         }
       }},
  };
  for (const auto& [key, value] : values) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(key, value);
  }
  return config;
}

std::string CanonicalConfigString(const ExperimentConfig& config) {
  std::ostringstream out;
  const PolicyConfig& pc = config.policy;
  out << "policy=" << JoinList(config.policies, [](const std::string& s) {
    return s;
  }) << '\n';
  out << "d=" << JoinList(config.d_values, [](int v) {
    return std::to_string(v);
  }) << '\n';
  out << "n=" << JoinList(config.n_values, [](int64_t v) {
    return std::to_string(v);
  }) << '\n';
  out << "p=" << JoinList(config.p_values, FormatDouble) << '\n';
  out << "c=" << JoinList(config.c_values, FormatDouble) << '\n';
  out << "signs="
      << (config.signs.all ? std::string("all")
                           : "sample:" + std::to_string(config.signs.sample_count))
      << '\n';
  out << "signs.fallback=" << config.all_fallback_count << '\n';
  out << "seeds=" << config.seeds << '\n';
  out << "master_seed=" << config.master_seed << '\n';
  out << "audit=" << (config.audit ? "on" : "off") << '\n';
  out << "eig_stride=" << config.eig_stride << '\n';
  out << "etc.m=" << pc.etc_m << '\n';
  out << "etc.lambda=" << FormatDouble(pc.etc_lambda) << '\n';
  out << "linucb.lambda=" << FormatDouble(pc.linucb_lambda) << '\n';
  out << "linucb.delta=" << FormatDouble(pc.linucb_delta) << '\n';
  out << "linucb.sigma=" << FormatDouble(pc.linucb_sigma) << '\n';
  if (pc.linucb_theta_norm) {
    out << "linucb.S=" << FormatDouble(*pc.linucb_theta_norm) << '\n';
  }
  out << "linucb.restarts=" << pc.linucb_restarts << '\n';
  out << "linucb.ascent="
      << (pc.linucb_ascent == AscentStep::kLinearized ? "linearized"
                                                      : "projected")
      << '\n';
  return out.str();
}

void ValidateConfig(const ExperimentConfig& config) {
  static const std::set<std::string> kKnownPolicies = {"uniform", "etc",
                                                       "linucb"};
  if (config.policies.empty()) throw ConfigError("no policy selected");
  for (const auto& name : config.policies) {
    if (!kKnownPolicies.count(name)) {
      throw ConfigError("unknown policy '" + name +
                        "' (expected uniform, etc or linucb)");
    }
  }
  if (config.d_values.empty() || config.n_values.empty() ||
      config.p_values.empty() || config.c_values.empty()) {
    throw ConfigError("d, n, p and c each need at least one value");
  }
  if (config.seeds < 1) throw ConfigError("seeds must be >= 1");
  if (config.require_verdict && config.seeds < 2) {
    throw ConfigError("seeds must be >= 2 for a lower-bound verdict");
  }
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.all_fallback_count == 0) {
    throw ConfigError("signs.fallback must be positive");
  }
  for (int d : config.d_values) {
    if (d < 1 || d > kMaxHardInstanceDim) {
      throw ConfigError("d must lie in [1, " +
                        std::to_string(kMaxHardInstanceDim) + "]");
    }
  }
  for (int64_t n : config.n_values) {
    if (n < 1) throw ConfigError("n must be positive");
  }
  for (double p : config.p_values) {
    if (!(p >= kMinExponent && p <= kMaxExponent)) {
      throw ConfigError("p must lie in [1.01, 100]");
    }
  }
  for (double c : config.c_values) {
    if (!(c > 0.0)) throw ConfigError("c must be positive");
  }
  for (int d : config.d_values) {
    for (int64_t n : config.n_values) {
      for (double p : config.p_values) {
        for (double c : config.c_values) {
          const AdmissibilityReport report = Admissible(d, n, p, c);
          if (!report.admissible()) throw InadmissibleRegime(report);
        }
      }
    }
  }
}

}  // namespace lpbandit
