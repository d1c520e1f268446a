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

#include <span>
#include <utility>
#include <vector>

#include "spiral/angle_spline.hpp"
#include "spiral/problem.hpp"
#include "spiral/sign_vector.hpp"
#include "spiral/tridiagonal.hpp"

namespace spiral {

// Signed square roots rho_j that stand in for the curvature magnitude of
// each segment on a given branch, with the radicands kept for diagnostics.
struct RhoVector {
  std::vector<double> values;
  std::vector<double> discriminants;
};

// Radicands below this are treated as non-positive.
inline constexpr double kMinDiscriminant = 1e-14;

// rho_1 and rho_n: sigma k sqrt(1 - k^2 L^2 / 20) at the two end segments.
// Throws kNegativeDiscriminant naming the offending segment.
std::pair<double, double> rho_endpoints(const ChordData& chord,
                                        const SignVector& sigma);

// Full rho vector. Interior entries subtract (b_{j+1} - b_j)^2 / 60 from
// the endpoint-style radicand.
RhoVector rho_interior(const ChordData& chord, const SignVector& sigma,
                       std::span<const double> b);

// Stage-one system T2 b = R2 (first row pins b_1 = 0).
TridiagonalSystem stage1_system(const ChordData& chord);
// Stage-two system T3 b = R3 with R3 built from the given rho.
TridiagonalSystem stage2_system(const ChordData& chord, const RhoVector& rho);

// O(eps^2) slope estimates b^(2). Requires n >= 3.
std::vector<double> estimate_b_stage1(const ChordData& chord);

// O(eps^3) slope estimates b^(3), with rho frozen at `b2`. Requires n >= 3.
std::vector<double> estimate_b_stage2(const ChordData& chord,
                                      const SignVector& sigma,
                                      std::span<const double> b2);

// Completes (a, b, c, d) from slopes b and the rho used to produce them.
// The result is C^1 with natural end conditions whenever b solves the
// stage-two system for the same rho.
AngleSpline recover_cda(const ChordData& chord, const RhoVector& rho,
                        std::span<const double> b);

// Closed-form estimate for two segments.
AngleSpline estimate_n2(const ChordData& chord, const SignVector& sigma);

// The O(eps^4) estimate for branch sigma: closed form for n = 2, otherwise
// stage one, stage two and coefficient recovery.
AngleSpline estimate(const ChordData& chord, const SignVector& sigma);

}  // namespace spiral
