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

#include <functional>
#include <span>
#include <vector>

namespace spiral {

struct SolverConfig {
  // Max-norm of the gap vector, in length units.
  double residual_tol = 1e-10;
  int max_iterations = 50;
  // Central-difference step for the Jacobian.
  double fd_step = 1e-6;
  // Backtracking factor applied to the step length.
  double damping = 0.5;
  int max_halvings = 20;

  void check() const;
};

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;

struct NewtonResult {
  std::vector<double> x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  // Max-norm residual after each accepted step, starting with x0.
  std::vector<double> history;
};

double max_norm(std::span<const double> values);

// Central-difference Jacobian of f at x; column k is df/dx_k.
std::vector<std::vector<double>> fd_jacobian(const ResidualFn& f,
                                             std::span<const double> x,
                                             double step);

// Square damped Newton iteration. Every accepted step strictly lowers the
// max-norm residual. Stops on convergence, iteration cap, or when no step
// length in the backtracking schedule helps. Throws kSingularJacobian.
NewtonResult damped_newton(const ResidualFn& f, std::vector<double> x0,
                           const SolverConfig& config);

}  // namespace spiral
