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

#include "spiral/error.hpp"

namespace spiral {

// Composite Simpson resolution, in subintervals per segment. The solver
// starts at `simpson_subintervals` and doubles up to `max_subintervals`.
struct QuadratureConfig {
  int simpson_subintervals = 4;
  int max_subintervals = 1024;

  void check() const {
    if (simpson_subintervals < 4 || simpson_subintervals % 2 != 0 ||
        max_subintervals % 2 != 0 || max_subintervals < simpson_subintervals) {
      throw Error(ErrorKind::kInvalidArgument,
                  "Simpson subinterval counts must be even with "
                  "4 <= start <= cap");
    }
  }

  QuadratureConfig scaled(int factor) const {
    return {simpson_subintervals * factor, max_subintervals * factor};
  }
};

// Composite Simpson's rule for f on [a, b] with an even number of
// subintervals. Works for any vector-space valued f.
template <class F>
auto composite_simpson(F&& f, double a, double b, int subintervals) {
  const double h = (b - a) / subintervals;
  auto sum = f(a) + f(b);
  for (int i = 1; i < subintervals; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * (h / 3.0);
}

}  // namespace spiral
