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

#include <optional>
#include <string>
#include <utility>

#include "spiral/angle_spline.hpp"
#include "spiral/error.hpp"
#include "spiral/sign_vector.hpp"

namespace spiral {

// Outcome of one sigma branch through estimation and, optionally, gap
// closing and energy optimisation.
struct BranchResult {
  explicit BranchResult(SignVector s) : sigma(std::move(s)) {}

  SignVector sigma;
  // Empty when estimation itself failed.
  std::optional<AngleSpline> estimate;
  double estimate_energy = 0.0;
  // Gap of the estimate itself, at high quadrature resolution.
  double estimate_residual = 0.0;

  std::optional<AngleSpline> refined;
  std::optional<double> refined_energy;

  std::optional<AngleSpline> optimized;
  std::optional<double> optimized_energy;

  // Gap of the most refined spline available.
  double residual = 0.0;
  int iterations = 0;
  int subintervals = 0;
  bool converged = false;

  // Set when some stage failed.
  std::optional<ErrorKind> stage_error;
  std::string stage_message;
};

}  // namespace spiral
