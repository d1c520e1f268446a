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

#include "spiral/angle_spline.hpp"
#include "spiral/problem.hpp"
#include "spiral/quadrature.hpp"
#include "spiral/vec2.hpp"

namespace spiral {

// Integral of (cos theta_j, sin theta_j) over the local interval [0, s].
Vec2 partial_displacement(const AngleSpline& spline, std::size_t j, double s,
                          int subintervals);

// The unit-speed curve y(t) = origin + integral from T_0 to t of
// (cos theta, sin theta), accumulated segment by segment.
Vec2 eval_curve(const AngleSpline& spline, Vec2 origin, double t,
                const QuadratureConfig& quad);

// Per-segment re-anchored curve: Y_j + integral from T_j to t on segment j.
// Interpolates every waypoint by construction but may jump at the knots.
Vec2 eval_tilde_curve(const AngleSpline& spline,
                      const InterpolationProblem& problem, double t,
                      const QuadratureConfig& quad);

// Integral of theta'(t)^2, the bending energy of the unit-speed curve. Cubic
// splines use the exact polynomial antiderivative; extended ones use Simpson.
double elastic_energy(const AngleSpline& spline,
                      const QuadratureConfig& quad = {});

// Simpson estimate of the same integral regardless of the spline kind.
double simpson_energy(const AngleSpline& spline, int subintervals);

// max_j |y(T_j) - Y_j|, integrated at 4x the configured resolution.
double interpolation_residual(const AngleSpline& spline,
                              const InterpolationProblem& problem,
                              const QuadratureConfig& quad = {});

}  // namespace spiral
