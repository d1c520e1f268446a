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

#include "spiral/problem.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "spiral/error.hpp"

namespace spiral {

InterpolationProblem make_problem(std::vector<double> times,
                                  std::vector<Vec2> waypoints) {
  if (times.size() != waypoints.size()) {
    throw Error(ErrorKind::kCountMismatch,
                std::to_string(times.size()) + " times but " +
                    std::to_string(waypoints.size()) + " waypoints");
  }
  if (times.size() < 3) {
    throw Error(ErrorKind::kCountMismatch,
                "at least 3 samples (n >= 2 segments) are required, got " +
                    std::to_string(times.size()));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || !std::isfinite(waypoints[i].x) ||
        !std::isfinite(waypoints[i].y)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite sample", i);
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw Error(ErrorKind::kNonMonotoneTimes,
                  "times must be strictly increasing", i);
    }
  }
  return InterpolationProblem{std::move(times), std::move(waypoints)};
}

void ValidationConfig::check() const {
  if (!(curvature_floor > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "curvature_floor must be > 0");
  }
  if (!(chord_radius_ceiling > 0.0 && chord_radius_ceiling < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "chord_radius_ceiling must lie in (0, 1)");
  }
  if (!(min_gap_ratio > 0.0 && max_gap_ratio >= min_gap_ratio)) {
    throw Error(ErrorKind::kInvalidArgument, "invalid gap ratio band");
  }
}

double discrete_curvature(double radius, double length) {
  return std::sqrt(12.0 * (1.0 - radius * radius)) / (length * radius);
}

std::vector<double> unwrap_angles(std::span<const Vec2> chords) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<double> angles;
  angles.reserve(chords.size());
  for (std::size_t j = 0; j < chords.size(); ++j) {
    const Vec2& q = chords[j];
    if (q.x == 0.0 && q.y == 0.0) {
      throw Error(ErrorKind::kZeroChord, "chord has zero length", j);
    }
    const double principal = std::atan2(q.y, q.x);
    if (j == 0) {
      angles.push_back(principal);
      continue;
    }
    // Lift into (prev - pi, prev + pi]; a gap of exactly pi goes to prev + pi.
    const double prev = angles.back();
    const double turns =
        std::floor((prev - std::numbers::pi - principal) / kTwoPi) + 1.0;
    double lifted = principal + turns * kTwoPi;
    if (lifted <= prev - std::numbers::pi) lifted += kTwoPi;
    if (lifted > prev + std::numbers::pi) lifted -= kTwoPi;
    angles.push_back(lifted);
  }
  return angles;
}

ChordData validate(const InterpolationProblem& problem,
                   const ValidationConfig& config) {
  config.check();
  const std::size_t n = problem.segment_count();
  ChordData data;
  data.times = problem.times;
  data.lengths.resize(n);
  data.chords.resize(n);
  data.radii.resize(n);
  data.curvatures.resize(n);

  for (std::size_t j = 0; j < n; ++j) {
    const double length = problem.times[j + 1] - problem.times[j];
    const Vec2 q = (problem.waypoints[j + 1] - problem.waypoints[j]) / length;
    const double r = q.norm();
    data.lengths[j] = length;
    data.chords[j] = q;
    data.radii[j] = r;
    if (r == 0.0) {
      throw Error(ErrorKind::kZeroChord, "consecutive waypoints coincide", j);
    }
    if (r >= config.chord_radius_ceiling) {
      throw Error(ErrorKind::kChordTooLong,
                  "chord length / duration = " + std::to_string(r) +
                      " is not below the ceiling; no unit-speed curve fits",
                  j);
    }
    data.curvatures[j] = discrete_curvature(r, length);
    if (data.curvatures[j] < config.curvature_floor) {
      throw Error(ErrorKind::kCurvatureTooSmall,
                  "discrete curvature " + std::to_string(data.curvatures[j]) +
                      " below floor (data nearly straight)",
                  j);
    }
  }

  const double mean =
      std::accumulate(data.lengths.begin(), data.lengths.end(), 0.0) /
      static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double ratio = data.lengths[j] / mean;
    if (ratio < config.min_gap_ratio || ratio > config.max_gap_ratio) {
      throw Error(ErrorKind::kGapRatio,
                  "segment duration ratio " + std::to_string(ratio) +
                      " outside configured band",
                  j);
    }
  }

  data.angles = unwrap_angles(data.chords);
  return data;
}

}  // namespace spiral
