# Copyright 2026 The lpbandit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the lpbandit core."""

import json

from lpbandit import _core
from lpbandit._core import (
    AdmissibilityReport,
    ConfigError,
    Error,
    FitUndefined,
    InadmissibleRegime,
    InfeasibleAction,
    InvalidExponent,
    InvalidInput,
    IOError,
    LpBall,
    NumericalFailure,
    Trajectory,
    admissible,
    argmax_linear,
    delta_gap,
    dual_exponent,
    is_feasible,
    lp_norm,
    minimax_lower_bound,
    oracle_check,
    project_lp,
    run_episode,
    sign_pattern,
    verify_lemmas,
    vertex_action,
)


def audit(trajectory, eig_stride=0):
    """Audit report of a hard-instance trajectory as a dict."""
    return json.loads(_core.audit_json(trajectory, eig_stride))


def run_grid(settings, write=True):
    """Runs a grid described by config keys and returns the results document.

    Values may be strings, numbers or lists; lists become comma lists.
    """
    flat = {}
    for key, value in settings.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "on" if value else "off"
        flat[key] = str(value)
    return json.loads(_core.run_grid_json(flat, write))

