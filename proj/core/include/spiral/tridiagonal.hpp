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

#include <vector>

namespace spiral {

// Row i reads sub[i-1] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i].
struct TridiagonalSystem {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> sup;
  std::vector<double> rhs;

  std::size_t size() const { return diag.size(); }
  // Throws kInvalidArgument when the band lengths disagree.
  void check_dimensions() const;
  bool strictly_diagonally_dominant() const;
};

// Thomas algorithm, no pivoting. Stable for the diagonally dominant systems
// produced by the estimator. Throws kSingularSystem on a zero pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

}  // namespace spiral
