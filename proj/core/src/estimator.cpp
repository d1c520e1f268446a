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

#include "spiral/estimator.hpp"

#include <cmath>
#include <string>

#include "spiral/error.hpp"

namespace spiral {

namespace {

void require_matching(const ChordData& chord, const SignVector& sigma) {
  if (chord.size() < 2 || sigma.size() != chord.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "sign vector length must equal the segment count (>= 2)");
  }
}

// k^2 (1 - k^2 L^2 / 20), the leading radicand shared by every rho_j.
double base_radicand(const ChordData& chord, std::size_t j) {
  const double k = chord.curvatures[j];
  const double kl = k * chord.lengths[j];
  return k * k * (1.0 - kl * kl / 20.0);
}

double signed_root(double radicand, int sign, std::size_t j) {
  if (!(radicand > kMinDiscriminant)) {
    throw Error(ErrorKind::kNegativeDiscriminant,
                "radicand " + std::to_string(radicand) +
                    " not positive; sampling too coarse for this branch",
                j);
  }
  return sign * std::sqrt(radicand);
}

AngleSpline assemble(const ChordData& chord, std::vector<CubicSegment> segs) {
  return AngleSpline(chord.times, std::move(segs));
}

}  // namespace

std::pair<double, double> rho_endpoints(const ChordData& chord,
                                        const SignVector& sigma) {
  require_matching(chord, sigma);
  const std::size_t last = chord.size() - 1;
  return {signed_root(base_radicand(chord, 0), sigma[0], 0),
          signed_root(base_radicand(chord, last), sigma[last], last)};
}

RhoVector rho_interior(const ChordData& chord, const SignVector& sigma,
                       std::span<const double> b) {
  require_matching(chord, sigma);
  const std::size_t n = chord.size();
  if (b.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "slope vector length mismatch");
  }
  RhoVector rho;
  rho.values.resize(n);
  rho.discriminants.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double radicand = base_radicand(chord, j);
    if (j > 0 && j + 1 < n) {
      const double jump = b[j + 1] - b[j];
      radicand -= jump * jump / 60.0;
    }
    rho.discriminants[j] = radicand;
    rho.values[j] = signed_root(radicand, sigma[j], j);
  }
  return rho;
}

TridiagonalSystem stage1_system(const ChordData& chord) {
  const std::size_t n = chord.size();
  const auto& len = chord.lengths;
  const auto& w = chord.angles;
  TridiagonalSystem sys{std::vector<double>(n - 1), std::vector<double>(n),
                        std::vector<double>(n - 1), std::vector<double>(n)};
  sys.diag[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    sys.sub[i - 1] = len[i - 1];
    sys.diag[i] = 2.0 * (len[i - 1] + len[i]);
    if (i + 1 < n) sys.sup[i] = len[i];
    sys.rhs[i] = 6.0 * (w[i] - w[i - 1]);
  }
  return sys;
}

TridiagonalSystem stage2_system(const ChordData& chord, const RhoVector& rho) {
  const std::size_t n = chord.size();
  const auto& len = chord.lengths;
  const auto& w = chord.angles;
  const auto& r = rho.values;
  TridiagonalSystem sys{std::vector<double>(n - 1), std::vector<double>(n),
                        std::vector<double>(n - 1), std::vector<double>(n)};
  sys.diag[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    sys.sub[i - 1] = -len[i - 1];
    sys.diag[i] = 3.0 * (len[i - 1] + len[i]);
    if (i + 1 < n) sys.sup[i] = -len[i];
    sys.rhs[i] =
        24.0 * (w[i] - w[i - 1]) - 10.0 * (len[i - 1] * r[i - 1] + len[i] * r[i]);
  }
  return sys;
}

std::vector<double> estimate_b_stage1(const ChordData& chord) {
  if (chord.size() < 3) {
    throw Error(ErrorKind::kInvalidArgument, "stage one needs n >= 3");
  }
  return solve_tridiagonal(stage1_system(chord));
}

std::vector<double> estimate_b_stage2(const ChordData& chord,
                                      const SignVector& sigma,
                                      std::span<const double> b2) {
  if (chord.size() < 3) {
    throw Error(ErrorKind::kInvalidArgument, "stage two needs n >= 3");
  }
  return solve_tridiagonal(stage2_system(chord, rho_interior(chord, sigma, b2)));
}

AngleSpline recover_cda(const ChordData& chord, const RhoVector& rho,
                        std::span<const double> b) {
  const std::size_t n = chord.size();
  if (b.size() != n || rho.values.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "slope/rho length mismatch");
  }
  std::vector<CubicSegment> segs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double len = chord.lengths[j];
    const double r = rho.values[j];
    // c_j L_j and d_j L_j^2; the last segment absorbs theta'(T_n) = 0.
    double cl = 0.0;
    double dl2 = 0.0;
    if (j + 1 < n) {
      cl = (-3.0 * b[j + 1] - 7.0 * b[j]) / 4.0 + 2.5 * r;
      dl2 = 5.0 * (b[j + 1] + b[j]) / 6.0 - 5.0 * r / 3.0;
    } else {
      cl = -(7.0 * b[j] - 10.0 * r) / 4.0;
      dl2 = 5.0 * (b[j] - 2.0 * r) / 6.0;
    }
    CubicSegment& g = segs[j];
    g.b = b[j];
    g.c = cl / len;
    g.d = dl2 / (len * len);
    g.a = chord.angles[j] - g.b * len / 2.0 - cl * len / 3.0 - dl2 * len / 4.0;
  }
  return assemble(chord, std::move(segs));
}

AngleSpline estimate_n2(const ChordData& chord, const SignVector& sigma) {
  require_matching(chord, sigma);
  if (chord.size() != 2) {
    throw Error(ErrorKind::kInvalidArgument, "closed form applies to n = 2");
  }
  const auto [r1, r2] = rho_endpoints(chord, sigma);
  const double l1 = chord.lengths[0];
  const double l2 = chord.lengths[1];
  const double w1 = chord.angles[0];
  const double w2 = chord.angles[1];
  const double sum = l1 + l2;

  std::vector<CubicSegment> segs(2);
  segs[0].a = (12.0 * (2.0 * l1 * w1 + 3.0 * l2 * w1 + l1 * w2) -
               5.0 * l1 * (4.0 * r1 * l1 + 3.0 * r1 * l2 + r2 * l2)) /
              (36.0 * sum);
  segs[1].a =
      (12.0 * (l1 * w2 + l2 * w1) + 5.0 * l1 * l2 * (r1 - r2)) / (12.0 * sum);
  segs[0].b = 0.0;
  segs[1].b = (24.0 * (w2 - w1) - 10.0 * (r2 * l2 + r1 * l1)) / (3.0 * sum);
  segs[0].c = (12.0 * (w1 - w2) + 5.0 * (2.0 * r1 * l1 + r1 * l2 + r2 * l2)) /
              (2.0 * l1 * sum);
  segs[1].c = (84.0 * (w1 - w2) +
               5.0 * (7.0 * r1 * l1 + 3.0 * r2 * l1 + 10.0 * r2 * l2)) /
              (6.0 * l2 * sum);
  segs[0].d = (60.0 * (w2 - w1) - 5.0 * (8.0 * r1 * l1 + 3.0 * r1 * l2 + 5.0 * r2 * l2)) /
              (9.0 * l1 * l1 * sum);
  segs[1].d = (60.0 * (w2 - w1) - 5.0 * (5.0 * r1 * l1 + 3.0 * r2 * l1 + 8.0 * r2 * l2)) /
              (9.0 * l2 * l2 * sum);
  return assemble(chord, std::move(segs));
}

AngleSpline estimate(const ChordData& chord, const SignVector& sigma) {
  require_matching(chord, sigma);
  if (chord.size() == 2) return estimate_n2(chord, sigma);
  const std::vector<double> b2 = estimate_b_stage1(chord);
  const RhoVector rho = rho_interior(chord, sigma, b2);
  const std::vector<double> b3 = solve_tridiagonal(stage2_system(chord, rho));
  return recover_cda(chord, rho, b3);
}

}  // namespace spiral
