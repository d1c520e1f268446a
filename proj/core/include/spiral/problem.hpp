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
#include <span>
#include <vector>

#include "spiral/vec2.hpp"

namespace spiral {

// Waypoints Y_0..Y_n to be visited at times T_0 < ... < T_n by a unit-speed
// curve. Construct through make_problem() so the structural invariants hold.
struct InterpolationProblem {
  std::vector<double> times;
  std::vector<Vec2> waypoints;

  std::size_t segment_count() const { return times.size() - 1; }
};

// Checks count equality, n >= 2, finiteness and strictly increasing times.
// Throws kCountMismatch or kNonMonotoneTimes (index = offending sample).
InterpolationProblem make_problem(std::vector<double> times,
                                  std::vector<Vec2> waypoints);

struct ValidationConfig {
  double curvature_floor = 1e-3;
  double chord_radius_ceiling = 1.0 - 1e-12;
  // Band for L_j / mean(L).
  double min_gap_ratio = 0.1;
  double max_gap_ratio = 10.0;

  void check() const;
};

// Per-segment chord quantities; segment j (0-based) joins Y_j and Y_{j+1}.
struct ChordData {
  std::vector<double> times;
  std::vector<double> lengths;
  std::vector<Vec2> chords;
  std::vector<double> radii;
  std::vector<double> angles;
  std::vector<double> curvatures;

  std::size_t size() const { return lengths.size(); }
};

// Discrete curvature sqrt(12 (1 - r^2)) / (L r) of a chord of relative
// length r over duration L.
double discrete_curvature(double radius, double length);

// Builds ChordData and enforces admissibility. Errors: kChordTooLong,
// kCurvatureTooSmall, kGapRatio, kZeroChord; index() names the segment.
ChordData validate(const InterpolationProblem& problem,
                   const ValidationConfig& config = {});

// Polar angles of the chords, each lifted to the branch nearest its
// predecessor. The first angle is the principal value in (-pi, pi]; a lift
// exactly pi away resolves upward.
std::vector<double> unwrap_angles(std::span<const Vec2> chords);

}  // namespace spiral
