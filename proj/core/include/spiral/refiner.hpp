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

#include <cstddef>
#include <span>
#include <vector>

#include "spiral/angle_spline.hpp"
#include "spiral/error.hpp"
#include "spiral/newton.hpp"
#include "spiral/problem.hpp"
#include "spiral/quadrature.hpp"
#include "spiral/vec2.hpp"

namespace spiral {

// Reduced coordinates of a natural C^1 cubic angle spline: v_0 = a_0,
// v_j = b_j L_j (j >= 1), u_j = a_{j+1} (j < n-1), u_{n-1} = d_{n-1} L^3.
// Every (u, v) maps to a spline satisfying the continuity and end
// conditions, so interpolation becomes 2n equations in 2n unknowns.
struct UVParams {
  std::vector<double> u;
  std::vector<double> v;

  std::vector<double> flatten() const;
  static UVParams unflatten(std::span<const double> x);
};

// Throws kExtensionPresent, or kContinuityViolated when the spline is off the
// natural C^1 manifold by more than 1e-8.
UVParams uv_from_coeffs(const AngleSpline& spline);

AngleSpline coeffs_from_uv(const UVParams& uv, std::span<const double> knots);

// Simpson estimate of the displacement over segment j.
Vec2 segment_displacement(const AngleSpline& spline, std::size_t j,
                          const QuadratureConfig& quad);

struct RefineDiagnostics {
  int iterations = 0;
  int subintervals = 0;
  // Gap measured at 4x the final solver resolution.
  double residual = 0.0;
  // Gap of the solved (Simpson) system.
  double system_residual = 0.0;
  bool converged = false;
  std::vector<double> residual_history;
};

struct Refinement {
  AngleSpline spline;
  RefineDiagnostics diagnostics;
};

// Raised when refinement stalls; carries the best iterate found.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& message, Refinement best);
  const Refinement& best() const { return best_; }

 private:
  Refinement best_;
};

// Solves z_j(u, v) = Y_{j+1} - Y_j by damped Newton starting from the
// estimate, doubling the Simpson resolution until the gap measured at
// higher resolution is within tolerance.
Refinement refine(const AngleSpline& estimate,
                  const InterpolationProblem& problem,
                  const QuadratureConfig& quad = {},
                  const SolverConfig& solver = {});

namespace detail {

// Gap vector (x_0, y_0, x_1, y_1, ...) of spline against the waypoints.
std::vector<double> gap_vector(const AngleSpline& spline,
                               const InterpolationProblem& problem,
                               int subintervals);

}  // namespace detail

}  // namespace spiral
