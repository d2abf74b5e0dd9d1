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


#include <sstream>
#include <string>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpbandit/checks.h"
#include "lpbandit/config.h"
#include "lpbandit/env.h"
#include "lpbandit/errors.h"
#include "lpbandit/geometry.h"
#include "lpbandit/harness.h"
#include "lpbandit/instance.h"
#include "lpbandit/policies.h"
#include "lpbandit/proofcheck.h"

namespace py = pybind11;

namespace lpbandit {
namespace {

Trajectory PlayEpisode(const std::string& policy, int d, int64_t n, double p,
                       double c, uint64_t sign_id, uint64_t seed) {
  const HardFamily family(LpBall(d, p, c), n);
  const HardInstance instance(family, SignPatternFromId(d, sign_id));
  PolicyConfig config;
  config.name = policy;
  auto agent = MakePolicy(config, instance.ball(), n, instance.theta().norm());
  return RunEpisode(*agent, instance, n, seed);
}

std::string RunGridJson(const KeyValues& settings, bool write) {
  const ExperimentConfig config = ConfigFromKeyValues(settings);
  const ExperimentReport report = RunGrid(config);
  if (write && !config.out_dir.empty()) WriteReport(report, config.out_dir);
  std::ostringstream out;
  EmitJson(report, out);
  return out.str();
}

py::list LemmaRows(int64_t trials, uint64_t seed) {
  py::list rows;
  for (const LemmaConfigResult& r : VerifyLemmas(trials, seed).configs) {
    py::dict row;
    row["d"] = r.spec.d;
    row["p"] = r.spec.p;
    row["c"] = r.spec.c;
    row["trials"] = r.trials;
    row["gap_violations"] = r.gap_violations;
    row["norm_violations"] = r.norm_violations;
    row["dominance_violations"] = r.dominance_violations;
    row["vertex_equality_failures"] = r.vertex_equality_failures;
    row["worst_gap_residual"] = r.worst_gap_residual;
    row["worst_norm_residual"] = r.worst_norm_residual;
    rows.append(row);
  }
  return rows;
}

py::dict OracleSummary(int instances, uint64_t seed, double tolerance) {
  const OracleReport report = OracleCheck(instances, seed, tolerance);
  py::dict out;
  out["instances"] = report.cases.size();
  out["tolerance"] = report.tolerance;
  out["worst_relative_error"] = report.worst_relative_error();
  out["failures"] = report.failures();
  return out;
}

}  // namespace
}  // namespace lpbandit

PYBIND11_MODULE(_core, m) {
  using namespace lpbandit;
  m.doc() = "Native core of lpbandit.";

  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<InvalidExponent>(m, "InvalidExponent", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<InadmissibleRegime>(m, "InadmissibleRegime",
                                             base.ptr());
  py::register_exception<InfeasibleAction>(m, "InfeasibleAction", base.ptr());
  py::register_exception<FitUndefined>(m, "FitUndefined", base.ptr());
  py::register_exception<IOError>(m, "IOError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<LpBall>(m, "LpBall")
      .def(py::init<int, double, double>(), py::arg("d"), py::arg("p"),
           py::arg("c"))
      .def_property_readonly("d", &LpBall::dim)
      .def_property_readonly("p", &LpBall::p)
      .def_property_readonly("c", &LpBall::radius)
      .def_property_readonly("q", &LpBall::q)
      .def_property_readonly("vertex_coordinate", &LpBall::vertex_coordinate)
      .def("__repr__", [](const LpBall& b) {
        std::ostringstream out;
        out << "LpBall(d=" << b.dim() << ", p=" << b.p()
            << ", c=" << b.radius() << ")";
        return out.str();
      });

  m.def("lp_norm", &LpNorm, py::arg("x"), py::arg("p"));
  m.def("dual_exponent", &DualExponent, py::arg("p"));
  m.def(
      "argmax_linear",
      [](const LpBall& ball, const Vector& theta) {
        const LinearMaximum r = ArgmaxLinear(ball, theta);
        return py::make_tuple(r.point, r.value);
      },
      py::arg("ball"), py::arg("theta"),
      "Maximizer of x.theta over the ball and its value.");
  m.def("project_lp", &ProjectLp, py::arg("ball"), py::arg("y"));
  m.def(
      "is_feasible",
      [](const LpBall& ball, const Vector& x) { return IsFeasible(ball, x); },
      py::arg("ball"), py::arg("x"));
  m.def(
      "vertex_action",
      [](const LpBall& ball, const SignPattern& signs) {
        return VertexAction(ball, signs);
      },
      py::arg("ball"), py::arg("signs"));

  py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
      .def_readonly("d", &AdmissibilityReport::d)
      .def_readonly("n", &AdmissibilityReport::n)
      .def_readonly("p", &AdmissibilityReport::p)
      .def_readonly("c", &AdmissibilityReport::c)
      .def_readonly("proof_limit", &AdmissibilityReport::proof_limit)
      .def_readonly("statement_limit", &AdmissibilityReport::statement_limit)
      .def_readonly("statement_condition",
                    &AdmissibilityReport::statement_condition)
      .def_property_readonly("admissible", &AdmissibilityReport::admissible)
      .def("describe", &AdmissibilityReport::Describe);
  m.def("admissible", &Admissible, py::arg("d"), py::arg("n"), py::arg("p"),
        py::arg("c"));
  m.def("delta_gap", &DeltaGap, py::arg("d"), py::arg("n"), py::arg("p"),
        py::arg("c"));
  m.def("minimax_lower_bound", &MinimaxLowerBound, py::arg("d"), py::arg("n"));
  m.def("sign_pattern", &SignPatternFromId, py::arg("d"), py::arg("id"));

  py::class_<Trajectory>(m, "Trajectory")
      .def_property_readonly("ball",
                             [](const Trajectory& t) { return t.ball; })
      .def_readonly("theta", &Trajectory::theta)
      .def_readonly("horizon", &Trajectory::horizon)
      .def_readonly("noise_seed", &Trajectory::noise_seed)
      .def_readonly("optimal_value", &Trajectory::optimal_value)
      .def_readonly("actions", &Trajectory::actions)
      .def_readonly("rewards", &Trajectory::rewards)
      .def_readonly("instant_regrets", &Trajectory::instant_regrets)
      .def_property_readonly("pseudo_regret", &PseudoRegret)
      .def("to_text",
           [](const Trajectory& t) {
             std::ostringstream out;
             WriteTrajectory(out, t);
             return out.str();
           })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return ReadTrajectory(in);
      });

  m.def("run_episode", &PlayEpisode, py::arg("policy"), py::arg("d"),
        py::arg("n"), py::arg("p"), py::arg("c"), py::arg("sign_id") = 0,
        py::arg("seed") = 0,
        "One episode of a named policy on a hard instance.");
  m.def(
      "audit_json",
      [](const Trajectory& t, int64_t eig_stride) {
        return AuditJson(Audit(t, eig_stride));
      },
      py::arg("trajectory"), py::arg("eig_stride") = 0);
  m.def("run_grid_json", &RunGridJson, py::arg("settings"),
        py::arg("write") = true, py::call_guard<py::gil_scoped_release>());
  m.def("verify_lemmas", &LemmaRows, py::arg("trials") = 10000,
        py::arg("master_seed") = 0);
  m.def("oracle_check", &OracleSummary, py::arg("instances") = 200,
        py::arg("master_seed") = 0, py::arg("tolerance") = kOracleTolerance);
}
