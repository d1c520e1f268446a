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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spiral {

// theta_j(s) = a + b s + c s^2 + d s^3 on the local parameter s in [0, L_j].
struct CubicSegment {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  friend bool operator==(const CubicSegment&, const CubicSegment&) = default;
};

// A C^1 family of quartic corrections F(p, s) s^4 added to every segment.
// `value` is F and `time_derivative` is dF/ds; both receive the q parameters
// of one segment.
struct ExtensionFamily {
  enum class Tag { kConstant };

  Tag tag = Tag::kConstant;
  std::size_t dimension = 1;
  std::function<double(std::span<const double>, double)> value;
  std::function<double(std::span<const double>, double)> time_derivative;

  // F(p, s) = p with q = 1.
  static ExtensionFamily constant();

  std::string name() const;
};

// Piecewise angle function over knots T_0 < ... < T_n. Segment j (0-based)
// covers [T_j, T_{j+1}); the last segment is closed at T_n.
class AngleSpline {
 public:
  AngleSpline(std::vector<double> knots, std::vector<CubicSegment> segments);

  // Returns a copy carrying quartic corrections; `params` holds
  // segment_count() * family.dimension values, segment-major.
  AngleSpline with_extension(ExtensionFamily family,
                             std::vector<double> params) const;
  AngleSpline without_extension() const;

  std::size_t segment_count() const { return segments_.size(); }
  std::span<const double> knots() const { return knots_; }
  std::span<const CubicSegment> segments() const { return segments_; }
  const CubicSegment& segment(std::size_t j) const { return segments_[j]; }
  double length(std::size_t j) const { return knots_[j + 1] - knots_[j]; }
  double start_time() const { return knots_.front(); }
  double end_time() const { return knots_.back(); }

  bool has_extension() const { return family_.has_value(); }
  const ExtensionFamily* family() const {
    return family_ ? &*family_ : nullptr;
  }
  std::span<const double> params() const { return params_; }
  std::span<const double> params(std::size_t j) const;

  // Segment owning t. Throws kOutOfDomain outside [T_0, T_n].
  std::size_t locate(double t) const;

  // theta_j(s) and theta_j'(s) on the local parameter of segment j.
  double local_value(std::size_t j, double s) const;
  double local_derivative(std::size_t j, double s) const;

 private:
  std::vector<double> knots_;
  std::vector<CubicSegment> segments_;
  std::optional<ExtensionFamily> family_;
  std::vector<double> params_;
};

double eval_theta(const AngleSpline& spline, double t);
double eval_theta_derivative(const AngleSpline& spline, double t);

// Largest violation of value/slope continuity at interior knots and of the
// natural end conditions theta'(T_0) = 0 = theta'(T_n).
struct ContinuityDefect {
  double value = 0.0;
  double slope = 0.0;
  double end_slope = 0.0;

  double max() const;
};

ContinuityDefect continuity_defect(const AngleSpline& spline);

}  // namespace spiral
