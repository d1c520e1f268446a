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

#include "spiral/curve.hpp"

#include <algorithm>
#include <cmath>

namespace spiral {

Vec2 partial_displacement(const AngleSpline& spline, std::size_t j, double s,
                          int subintervals) {
  if (s == 0.0) return {};
  return composite_simpson(
      [&](double x) { return unit(spline.local_value(j, x)); }, 0.0, s,
      subintervals);
}

Vec2 eval_curve(const AngleSpline& spline, Vec2 origin, double t,
                const QuadratureConfig& quad) {
  const std::size_t seg = spline.locate(t);
  Vec2 point = origin;
  for (std::size_t j = 0; j < seg; ++j) {
    point += partial_displacement(spline, j, spline.length(j),
                                  quad.simpson_subintervals);
  }
  point += partial_displacement(spline, seg, t - spline.knots()[seg],
                                quad.simpson_subintervals);
  return point;
}

Vec2 eval_tilde_curve(const AngleSpline& spline,
                      const InterpolationProblem& problem, double t,
                      const QuadratureConfig& quad) {
  const std::size_t seg = spline.locate(t);
  return problem.waypoints[seg] +
         partial_displacement(spline, seg, t - spline.knots()[seg],
                              quad.simpson_subintervals);
}

namespace {

// Integral over [0, L] of (b + 2 c s + 3 d s^2)^2.
double cubic_segment_energy(const CubicSegment& g, double len) {
  const double l2 = len * len;
  const double l3 = l2 * len;
  return g.b * g.b * len + 2.0 * g.b * g.c * l2 +
         (4.0 * g.c * g.c + 6.0 * g.b * g.d) * l3 / 3.0 +
         3.0 * g.c * g.d * l3 * len + 1.8 * g.d * g.d * l3 * l2;
}

}  // namespace

double simpson_energy(const AngleSpline& spline, int subintervals) {
  double total = 0.0;
  for (std::size_t j = 0; j < spline.segment_count(); ++j) {
    total += composite_simpson(
        [&](double s) {
          const double k = spline.local_derivative(j, s);
          return k * k;
        },
        0.0, spline.length(j), subintervals);
  }
  return total;
}

double elastic_energy(const AngleSpline& spline, const QuadratureConfig& quad) {
  if (spline.has_extension()) {
    return simpson_energy(spline, quad.simpson_subintervals);
  }
  double total = 0.0;
  for (std::size_t j = 0; j < spline.segment_count(); ++j) {
    total += cubic_segment_energy(spline.segment(j), spline.length(j));
  }
  return total;
}

double interpolation_residual(const AngleSpline& spline,
                              const InterpolationProblem& problem,
                              const QuadratureConfig& quad) {
  const int subintervals = 4 * quad.simpson_subintervals;
  Vec2 point = problem.waypoints.front();
  double worst = 0.0;
  for (std::size_t j = 0; j < spline.segment_count(); ++j) {
    point += partial_displacement(spline, j, spline.length(j), subintervals);
    worst = std::max(worst, (point - problem.waypoints[j + 1]).norm());
  }
  return worst;
}

}  // namespace spiral
