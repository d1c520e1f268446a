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

#include "spiral/tridiagonal.hpp"

#include <cmath>

#include "spiral/error.hpp"

namespace spiral {

void TridiagonalSystem::check_dimensions() const {
  const std::size_t n = diag.size();
  if (n == 0 || rhs.size() != n || sub.size() + 1 != n || sup.size() + 1 != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "tridiagonal bands must have lengths n-1, n, n-1 and rhs n");
  }
}

bool TridiagonalSystem::strictly_diagonally_dominant() const {
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double off = 0.0;
    if (i > 0) off += std::abs(sub[i - 1]);
    if (i + 1 < diag.size()) off += std::abs(sup[i]);
    if (!(std::abs(diag[i]) > off)) return false;
  }
  return true;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
  system.check_dimensions();
  const std::size_t n = system.size();
  std::vector<double> upper(n, 0.0);
  std::vector<double> x(n, 0.0);

  double pivot = system.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) pivot = system.diag[i] - system.sub[i - 1] * upper[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw Error(ErrorKind::kSingularSystem, "zero pivot in Thomas sweep", i);
    }
    if (i + 1 < n) upper[i] = system.sup[i] / pivot;
    const double carried = i > 0 ? system.sub[i - 1] * x[i - 1] : 0.0;
    x[i] = (system.rhs[i] - carried) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= upper[i] * x[i + 1];
  return x;
}

}  // namespace spiral
