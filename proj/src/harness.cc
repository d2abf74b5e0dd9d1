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

#include "lpbandit/harness.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <thread>
#include <tuple>

#include "boost/math/distributions/students_t.hpp"
#include "lpbandit/env.h"
#include "lpbandit/policies.h"
#include "lpbandit/rng.h"

namespace lpbandit {
namespace {

constexpr uint64_t kEpisodeTag = 0x657069736f6465ULL;
constexpr uint64_t kSignTag = 0x7369676e73ULL;

uint64_t EpisodeSeed(uint64_t master, const GridCell& cell, uint64_t sign_id,
                     int seed_index) {
  // The policy is not part of the key: every policy sees the same noise on
  // the same (instance, seed), which pairs the comparisons.
  return DeriveSeed(master, {kEpisodeTag, static_cast<uint64_t>(cell.d),
                             static_cast<uint64_t>(cell.n),
                             std::bit_cast<uint64_t>(cell.p),
                             std::bit_cast<uint64_t>(cell.c), sign_id,
                             static_cast<uint64_t>(seed_index)});
}

std::vector<uint64_t> SignIdsFor(const ExperimentConfig& config, int d) {
  std::mt19937_64 rng(
      DeriveSeed(config.master_seed, {kSignTag, static_cast<uint64_t>(d)}));
  if (config.signs.all) {
    if (d <= kEnumerateUpToDim) return EnumerateSignIds(d);
    return SampleSignIds(d, config.all_fallback_count, rng);
  }
  return SampleSignIds(d, config.signs.sample_count, rng);
}

std::string TrajectoryFileName(const GridCell& cell, uint64_t sign_id,
                               int seed_index) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s_d%d_n%lld_p%g_c%g_s%llu_k%d.txt",
                cell.policy.c_str(), cell.d, static_cast<long long>(cell.n),
                cell.p, cell.c, static_cast<unsigned long long>(sign_id),
                seed_index);
  return buf;
}

// FNV-1a over the canonical config text.
std::string RunId(const ExperimentConfig& config) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : CanonicalConfigString(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

CellSummary Summarize(const GridCell& cell,
                      std::span<const EpisodeRecord> records) {
  CellSummary summary;
  summary.lower_bound = MinimaxLowerBound(cell.d, cell.n);
  std::vector<double> regrets;
  std::map<std::string, size_t> violations;
  for (const EpisodeRecord& r : records) {
    if (!r.ok) {
      ++summary.failures;
      continue;
    }
    regrets.push_back(r.pseudo_regret);
    if (!r.audit) continue;
    ++summary.audited;
    if (r.audit->passed()) ++summary.audit_passed;
    for (const AuditFlag& f : r.audit->flags) {
      if (f.gating) violations[f.name] += f.check.holds ? 0 : 1;
    }
  }
  summary.episodes = regrets.size();
  if (!regrets.empty()) {
    double total = 0.0;
    for (double v : regrets) total += v;
    summary.mean_regret = total / static_cast<double>(regrets.size());
  }
  summary.sem = StandardError(regrets);
  summary.verdict =
      DecideVerdict(summary.mean_regret, summary.sem, summary.lower_bound,
                    summary.episodes, summary.failures);
  summary.flag_violations.assign(violations.begin(), violations.end());
  return summary;
}

struct Task {
  size_t cell;
  uint64_t sign_id;
  int seed_index;
};

EpisodeRecord RunTask(const ExperimentConfig& config, const GridCell& cell,
                      const Task& task, const PolicyFactory& factory) {
  EpisodeRecord record;
  record.cell = task.cell;
  record.sign_id = task.sign_id;
  record.seed_index = task.seed_index;
  record.noise_seed =
      EpisodeSeed(config.master_seed, cell, task.sign_id, task.seed_index);
  try {
    const LpBall ball(cell.d, cell.p, cell.c);
    const HardFamily family(ball, cell.n);
    const HardInstance instance(family, SignPatternFromId(cell.d, task.sign_id));
    std::unique_ptr<Policy> policy = factory(cell, instance);
    const Trajectory traj =
        RunEpisode(*policy, instance, cell.n, record.noise_seed);
    record.pseudo_regret = PseudoRegret(traj);
    if (config.audit) record.audit = Audit(traj, config.eig_stride);
    if (config.dump_trajectories && !config.out_dir.empty()) {
      const auto path = std::filesystem::path(config.out_dir) / "trajectories" /
                        TrajectoryFileName(cell, task.sign_id, task.seed_index);
      std::ofstream out(path);
      if (!out) throw IOError("cannot write " + path.string());
      WriteTrajectory(out, traj);
    }
  } catch (const Error& e) {
    record.ok = false;
    record.error_code = e.code();
    record.error = e.what();
  } catch (const std::exception& e) {
    record.ok = false;
    record.error_code = ErrorCode::kNumericalFailure;
    record.error = e.what();
  }
  return record;
}

}  // namespace

const char* VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kMet:
      return "met";
    case Verdict::kNotMet:
      return "not_met";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict DecideVerdict(double mean, double sem, double bound, size_t episodes,
                      size_t failures) {
  if (episodes < 2 || failures > 0) return Verdict::kInconclusive;
  return mean >= bound - 2.0 * sem ? Verdict::kMet : Verdict::kNotMet;
}

double StandardError(const std::vector<double>& values) {
  const size_t count = values.size();
  if (count < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(count);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(count - 1);
  return std::sqrt(variance / static_cast<double>(count));
}

LogLogFit FitLogLog(const std::vector<double>& x, const std::vector<double>& y,
                    size_t min_points, double min_span) {
  if (x.size() != y.size()) throw InvalidInput("fit inputs differ in length");
  if (x.size() < std::max<size_t>(min_points, 2)) {
    throw InvalidInput("fit needs at least " + std::to_string(min_points) +
                       " points");
  }
  for (double v : x) {
    if (!(v > 0.0)) throw InvalidInput("fit abscissae must be positive");
  }
  for (double v : y) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw FitUndefined("log-log fit needs positive finite means");
    }
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*hi / *lo < min_span) {
    throw InvalidInput("fit abscissae must span at least a factor of " +
                       std::to_string(min_span));
  }

  const size_t k = x.size();
  std::vector<double> lx(k), ly(k);
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < k; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw InvalidInput("fit abscissae are all equal");
  LogLogFit fit;
  fit.points = k;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (k < 3) {
    fit.slope_ci_low = fit.slope_ci_high =
        std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  double ssr = 0.0;
  for (size_t i = 0; i < k; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ssr += r * r;
  }
  const double dof = static_cast<double>(k - 2);
  const double se = std::sqrt(ssr / dof / sxx);
  const boost::math::students_t_distribution<double> t(dof);
  const double half = boost::math::quantile(t, 0.975) * se;
  fit.slope_ci_low = fit.slope - half;
  fit.slope_ci_high = fit.slope + half;
  return fit;
}

size_t ExperimentReport::failed_episodes() const {
  return std::count_if(episodes.begin(), episodes.end(),
                       [](const EpisodeRecord& r) { return !r.ok; });
}

size_t ExperimentReport::audit_failures() const {
  return std::count_if(episodes.begin(), episodes.end(),
                       [](const EpisodeRecord& r) {
                         return r.audit && !r.audit->passed();
                       });
}

bool ExperimentReport::all_bounds_met() const {
  return std::all_of(summaries.begin(), summaries.end(),
                     [](const CellSummary& s) {
                       return s.verdict == Verdict::kMet;
                     });
}

std::vector<GridCell> BuildGrid(const ExperimentConfig& config) {
  std::set<std::string> policies(config.policies.begin(),
                                 config.policies.end());
  std::set<int> ds(config.d_values.begin(), config.d_values.end());
  std::set<int64_t> ns(config.n_values.begin(), config.n_values.end());
  std::set<double> ps(config.p_values.begin(), config.p_values.end());
  std::set<double> cs(config.c_values.begin(), config.c_values.end());

  std::map<int, std::vector<uint64_t>> signs_by_d;
  for (int d : ds) signs_by_d[d] = SignIdsFor(config, d);

  std::vector<GridCell> cells;
  for (const auto& policy : policies) {
    for (int d : ds) {
      for (int64_t n : ns) {
        for (double p : ps) {
          for (double c : cs) {
            GridCell cell;
            cell.policy = policy;
            cell.d = d;
            cell.n = n;
            cell.p = p;
            cell.c = c;
            cell.delta = DeltaGap(d, n, p, c);
            cell.sign_ids = signs_by_d[d];
            cells.push_back(std::move(cell));
          }
        }
      }
    }
  }
  return cells;
}

ExperimentReport RunGrid(const ExperimentConfig& config,
                         const PolicyFactory& factory) {
  ValidateConfig(config);
  ExperimentReport report;
  report.config = config;
  report.run_id = RunId(config);
  report.cells = BuildGrid(config);

  PolicyFactory make = factory;
  if (!make) {
    make = [&config](const GridCell& cell, const HardInstance& instance) {
      PolicyConfig pc = config.policy;
      pc.name = cell.policy;
      return MakePolicy(pc, instance.ball(), cell.n, instance.theta().norm());
    };
  }

  std::vector<Task> tasks;
  for (size_t c = 0; c < report.cells.size(); ++c) {
    for (uint64_t sign_id : report.cells[c].sign_ids) {
      for (int s = 0; s < config.seeds; ++s) tasks.push_back({c, sign_id, s});
    }
  }

  if (config.dump_trajectories && !config.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(
        std::filesystem::path(config.out_dir) / "trajectories", ec);
    if (ec) throw IOError("cannot create output directory: " + ec.message());
  }

  // Each task writes only its own slot; the reduction below runs after join.
  report.episodes.resize(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      report.episodes[i] =
          RunTask(config, report.cells[tasks[i].cell], tasks[i], make);
    }
  };
  const int threads =
      std::max(1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  size_t begin = 0;
  for (size_t c = 0; c < report.cells.size(); ++c) {
    size_t end = begin;
    while (end < report.episodes.size() && report.episodes[end].cell == c) ++end;
    report.summaries.push_back(Summarize(
        report.cells[c],
        std::span<const EpisodeRecord>(report.episodes.data() + begin,
                                       end - begin)));
    begin = end;
  }
  report.scaling = ComputeScaling(report);
  return report;
}

std::vector<ScalingEntry> ComputeScaling(const ExperimentReport& report) {
  std::vector<ScalingEntry> entries;
  using Key = std::tuple<std::string, int, int64_t, double, double>;
  // Group cells along n (d fixed) and along d (n fixed).
  std::map<Key, std::vector<size_t>> by_n, by_d;
  for (size_t i = 0; i < report.cells.size(); ++i) {
    const GridCell& cell = report.cells[i];
    if (report.summaries[i].episodes == 0) continue;
    by_n[{cell.policy, cell.d, 0, cell.p, cell.c}].push_back(i);
    by_d[{cell.policy, 0, cell.n, cell.p, cell.c}].push_back(i);
  }
  auto emit = [&](const std::string& axis,
                  const std::map<Key, std::vector<size_t>>& groups,
                  size_t min_points, double min_span) {
    for (const auto& [key, members] : groups) {
      if (members.size() < min_points) continue;
      ScalingEntry entry;
      entry.policy = std::get<0>(key);
      entry.axis = axis;
      entry.d = std::get<1>(key);
      entry.n = std::get<2>(key);
      entry.p = std::get<3>(key);
      entry.c = std::get<4>(key);
      std::vector<double> bounds;
      for (size_t i : members) {
        const GridCell& cell = report.cells[i];
        entry.x.push_back(axis == "n" ? static_cast<double>(cell.n)
                                      : static_cast<double>(cell.d));
        entry.mean_regret.push_back(report.summaries[i].mean_regret);
        bounds.push_back(MinimaxLowerBound(cell.d, cell.n));
      }
      try {
        entry.fit = FitLogLog(entry.x, entry.mean_regret, min_points, min_span);
        entry.bound_fit = FitLogLog(entry.x, bounds, min_points, min_span);
      } catch (const Error&) {
        continue;
      }
      entries.push_back(std::move(entry));
    }
  };
  emit("n", by_n, 4, 16.0);
  emit("d", by_d, 2, 1.0);
  return entries;
}

}  // namespace lpbandit
