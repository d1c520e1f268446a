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

#include "spiral/refiner.hpp"

#include <cmath>
#include <string>

#include "spiral/curve.hpp"

namespace spiral {

namespace {
constexpr double kManifoldTolerance = 1e-8;
}

std::vector<double> UVParams::flatten() const {
  std::vector<double> x(u);
  x.insert(x.end(), v.begin(), v.end());
  return x;
}

UVParams UVParams::unflatten(std::span<const double> x) {
  const std::size_t n = x.size() / 2;
  return {std::vector<double>(x.begin(), x.begin() + n),
          std::vector<double>(x.begin() + n, x.end())};
}

UVParams uv_from_coeffs(const AngleSpline& spline) {
  if (spline.has_extension()) {
    throw Error(ErrorKind::kExtensionPresent,
                "reduced coordinates cover cubic splines only");
  }
  const ContinuityDefect defect = continuity_defect(spline);
  if (defect.max() > kManifoldTolerance) {
    throw Error(ErrorKind::kContinuityViolated,
                "spline violates C^1 / natural end conditions by " +
                    std::to_string(defect.max()));
  }
  const std::size_t n = spline.segment_count();
  UVParams uv{std::vector<double>(n), std::vector<double>(n)};
  uv.v[0] = spline.segment(0).a;
  for (std::size_t j = 1; j < n; ++j) {
    uv.v[j] = spline.segment(j).b * spline.length(j);
  }
  for (std::size_t j = 0; j + 1 < n; ++j) uv.u[j] = spline.segment(j + 1).a;
  const double last = spline.length(n - 1);
  uv.u[n - 1] = spline.segment(n - 1).d * last * last * last;
  return uv;
}

AngleSpline coeffs_from_uv(const UVParams& uv, std::span<const double> knots) {
  const std::size_t n = uv.u.size();
  if (n < 2 || uv.v.size() != n || knots.size() != n + 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "(u, v) need n >= 2 entries each and n + 1 knots");
  }
  const auto& u = uv.u;
  const auto& v = uv.v;
  std::vector<double> len(n);
  for (std::size_t j = 0; j < n; ++j) len[j] = knots[j + 1] - knots[j];

  std::vector<CubicSegment> segs(n);
  segs[0].a = v[0];
  for (std::size_t j = 1; j < n; ++j) {
    segs[j].a = u[j - 1];
    segs[j].b = v[j] / len[j];
  }
  {
    const double l0 = len[0];
    const double l1 = len[1];
    const double rise = u[0] - v[0];
    segs[0].c = -(l0 * v[1] - 3.0 * l1 * rise) / (l0 * l0 * l1);
    segs[0].d = (l0 * v[1] - 2.0 * l1 * rise) / (l0 * l0 * l0 * l1);
  }
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double lj = len[j];
    const double ln = len[j + 1];
    const double rise = u[j] - u[j - 1];
    segs[j].c =
        -(lj * v[j + 1] + 2.0 * ln * v[j] - 3.0 * ln * rise) / (lj * lj * ln);
    segs[j].d =
        (lj * v[j + 1] + ln * v[j] - 2.0 * ln * rise) / (lj * lj * lj * ln);
  }
  const double ll = len[n - 1];
  segs[n - 1].c = -(3.0 * u[n - 1] + v[n - 1]) / (2.0 * ll * ll);
  segs[n - 1].d = u[n - 1] / (ll * ll * ll);
  return AngleSpline(std::vector<double>(knots.begin(), knots.end()),
                     std::move(segs));
}

Vec2 segment_displacement(const AngleSpline& spline, std::size_t j,
                          const QuadratureConfig& quad) {
  return partial_displacement(spline, j, spline.length(j),
                              quad.simpson_subintervals);
}

NoConvergenceError::NoConvergenceError(const std::string& message,
                                       Refinement best)
    : Error(ErrorKind::kNoConvergence, message), best_(std::move(best)) {}

namespace detail {

std::vector<double> gap_vector(const AngleSpline& spline,
                               const InterpolationProblem& problem,
                               int subintervals) {
  const std::size_t n = spline.segment_count();
  std::vector<double> gap(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2 z =
        partial_displacement(spline, j, spline.length(j), subintervals);
    const Vec2 target = problem.waypoints[j + 1] - problem.waypoints[j];
    gap[2 * j] = z.x - target.x;
    gap[2 * j + 1] = z.y - target.y;
  }
  return gap;
}

}  // namespace detail

Refinement refine(const AngleSpline& estimate,
                  const InterpolationProblem& problem,
                  const QuadratureConfig& quad, const SolverConfig& solver) {
  quad.check();
  solver.check();
  const std::size_t n = estimate.segment_count();
  if (problem.segment_count() != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "spline and problem disagree on the segment count");
  }
  const std::vector<double> knots(estimate.knots().begin(),
                                  estimate.knots().end());
  std::vector<double> x = uv_from_coeffs(estimate).flatten();
  // Knot gaps accumulate along the curve, so each segment gets a share.
  SolverConfig inner = solver;
  inner.residual_tol = solver.residual_tol / (2.0 * static_cast<double>(n));

  RefineDiagnostics diag;
  int subintervals = quad.simpson_subintervals;
  while (true) {
    const ResidualFn gaps = [&](std::span<const double> point) {
      return detail::gap_vector(coeffs_from_uv(UVParams::unflatten(point), knots),
                                problem, subintervals);
    };
    NewtonResult result = damped_newton(gaps, x, inner);
    x = std::move(result.x);
    diag.iterations += result.iterations;
    diag.residual_history.insert(diag.residual_history.end(),
                                 result.history.begin(), result.history.end());
    diag.subintervals = subintervals;
    diag.system_residual = result.residual;

    AngleSpline spline = coeffs_from_uv(UVParams::unflatten(x), knots);
    diag.residual = interpolation_residual(
        spline, problem, QuadratureConfig{subintervals, quad.max_subintervals});
    if (result.converged && diag.residual <= solver.residual_tol) {
      diag.converged = true;
      return {std::move(spline), std::move(diag)};
    }
    if (subintervals * 2 > quad.max_subintervals) {
      throw NoConvergenceError(
          "gap " + std::to_string(diag.residual) + " above tolerance at " +
              std::to_string(subintervals) + " Simpson subintervals",
          Refinement{std::move(spline), std::move(diag)});
    }
    subintervals *= 2;
  }
}

}  // namespace spiral
