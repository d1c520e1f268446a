// Copyright 2026 The Spiral Spline Authors
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

#pragma once

#include <span>
#include <vector>

#include "spiral/angle_spline.hpp"
#include "spiral/branch.hpp"
#include "spiral/newton.hpp"
#include "spiral/problem.hpp"
#include "spiral/quadrature.hpp"

namespace spiral {

// (u, v) plus the quartic correction parameters, segment-major in p.
struct ExtendedUVP {
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> p;
};

// Maps (u, v, p) to an extended spline. The cubic part is corrected so
// value and slope still match at every interior knot and theta' vanishes at
// both ends, whatever F is.
AngleSpline coeffs_from_uvp(const ExtendedUVP& uvp,
                            std::span<const double> knots,
                            const ExtensionFamily& family);

struct OptimizerConfig {
  int max_iterations = 300;
  // Stop when the reduced gradient max-norm falls below this. Coordinates
  // are (u, v, p_j L_j^4), all in radians.
  double gradient_tol = 1e-7;
  // Or when one step lowers the energy by less than this, relative.
  double energy_tol = 1e-12;
  // Largest change of p_j L_j^4 in one step, radians.
  double max_step = 0.25;
  // Largest Newton correction to the predicted dependent variables after a
  // step.
  double max_correction = 0.05;
  // Re-pick the dependent variables when their Jacobian block's reciprocal
  // condition number drops below this.
  double min_rcond = 1e-4;
  // Simpson subintervals per segment for the energy integral.
  int energy_subintervals = 256;
  double fd_step = 1e-6;
};

struct OptimizeResult {
  AngleSpline spline;
  double energy = 0.0;
  // Seed energy at the same quadrature, so the difference is comparable.
  double seed_energy = 0.0;
  double residual = 0.0;
  int iterations = 0;
  int subintervals = 0;
};

// Lowers the bending energy over (u, v, p) while keeping every waypoint
// interpolated. Starts at the refined seed with p = 0. Generalised reduced
// gradient: 2n of the coordinates are solved from the gap equations after
// every step, the rest move by quasi-Newton steps on the reduced energy. The
// split starts as (u, v) against p and is re-picked near folds.
//
// Throws kNoConvergence when the seed did not converge and
// kConstraintViolated if the final gap exceeds the tolerance.
OptimizeResult optimize_energy(const BranchResult& seed,
                               const InterpolationProblem& problem,
                               const ExtensionFamily& family,
                               const QuadratureConfig& quad = {},
                               const SolverConfig& solver = {},
                               const OptimizerConfig& config = {});

}  // namespace spiral
