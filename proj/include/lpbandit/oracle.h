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

#ifndef LPBANDIT_ORACLE_H_
#define LPBANDIT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <random>

#include "lpbandit/geometry.h"

// Brute-force maximizers over the L^p ball used to cross-check the closed
// forms. Nothing here calls ArgmaxLinear.

namespace lpbandit {

using Objective = std::function<double(const Vector&)>;

// Multi-start projected gradient ascent on x.theta: from each random start,
// x <- ProjectLp(x + eta_k theta) with a geometrically growing eta_k.
// Returns the best value found.
double ProjectedAscentLinearMax(const LpBall& ball, const Vector& theta,
                                int starts, std::mt19937_64& rng);

// Dense grid over the boundary (d <= 3), refined by a derivative-free local
// search around the best grid point. `objective` must be defined on boundary
// points. Throws InvalidInput for d > 3.
double BoundaryGridMax(const LpBall& ball, const Objective& objective,
                       int grid_points);

// Boundary point c u / ||u||_p in direction u.
Vector BoundaryPoint(const LpBall& ball, const Vector& direction);

}  // namespace lpbandit

#endif  // LPBANDIT_ORACLE_H_
