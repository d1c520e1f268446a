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

#include "spiral/angle_spline.hpp"

#include <algorithm>
#include <cmath>

#include "spiral/error.hpp"

namespace spiral {

ExtensionFamily ExtensionFamily::constant() {
  ExtensionFamily family;
  family.tag = Tag::kConstant;
  family.dimension = 1;
  family.value = [](std::span<const double> p, double) { return p[0]; };
  family.time_derivative = [](std::span<const double>, double) { return 0.0; };
  return family;
}

std::string ExtensionFamily::name() const {
  switch (tag) {
    case Tag::kConstant: return "constant";
  }
  return "unknown";
}

AngleSpline::AngleSpline(std::vector<double> knots,
                         std::vector<CubicSegment> segments)
    : knots_(std::move(knots)), segments_(std::move(segments)) {
  if (segments_.empty() || knots_.size() != segments_.size() + 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "angle spline needs n >= 1 segments and n + 1 knots");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1])) {
      throw Error(ErrorKind::kNonMonotoneTimes, "knots must increase", i);
    }
  }
}

AngleSpline AngleSpline::with_extension(ExtensionFamily family,
                                        std::vector<double> params) const {
  if (family.dimension == 0 || !family.value || !family.time_derivative) {
    throw Error(ErrorKind::kInvalidArgument, "incomplete extension family");
  }
  if (params.size() != segments_.size() * family.dimension) {
    throw Error(ErrorKind::kInvalidArgument,
                "extension parameter count does not match segment count");
  }
  AngleSpline out = *this;
  out.family_ = std::move(family);
  out.params_ = std::move(params);
  return out;
}

AngleSpline AngleSpline::without_extension() const {
  return AngleSpline(knots_, segments_);
}

std::span<const double> AngleSpline::params(std::size_t j) const {
  if (!family_) return {};
  const std::size_t q = family_->dimension;
  return std::span<const double>(params_).subspan(j * q, q);
}

std::size_t AngleSpline::locate(double t) const {
  if (!(t >= knots_.front() && t <= knots_.back())) {
    throw Error(ErrorKind::kOutOfDomain,
                "t = " + std::to_string(t) + " outside the knot range");
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const auto j = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return std::min(j, segments_.size() - 1);
}

double AngleSpline::local_value(std::size_t j, double s) const {
  const CubicSegment& g = segments_[j];
  double value = g.a + s * (g.b + s * (g.c + s * g.d));
  if (family_) {
    const double s2 = s * s;
    const double f = family_->tag == ExtensionFamily::Tag::kConstant
                         ? params_[j]
                         : family_->value(params(j), s);
    value += f * s2 * s2;
  }
  return value;
}

double AngleSpline::local_derivative(std::size_t j, double s) const {
  const CubicSegment& g = segments_[j];
  double slope = g.b + s * (2.0 * g.c + 3.0 * g.d * s);
  if (family_) {
    const double s3 = s * s * s;
    if (family_->tag == ExtensionFamily::Tag::kConstant) {
      slope += 4.0 * params_[j] * s3;
    } else {
      const auto p = params(j);
      slope += family_->time_derivative(p, s) * s3 * s +
               4.0 * family_->value(p, s) * s3;
    }
  }
  return slope;
}

double eval_theta(const AngleSpline& spline, double t) {
  const std::size_t j = spline.locate(t);
  return spline.local_value(j, t - spline.knots()[j]);
}

double eval_theta_derivative(const AngleSpline& spline, double t) {
  const std::size_t j = spline.locate(t);
  return spline.local_derivative(j, t - spline.knots()[j]);
}

double ContinuityDefect::max() const {
  return std::max({value, slope, end_slope});
}

ContinuityDefect continuity_defect(const AngleSpline& spline) {
  ContinuityDefect defect;
  const std::size_t n = spline.segment_count();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double len = spline.length(j);
    defect.value = std::max(
        defect.value,
        std::abs(spline.local_value(j, len) - spline.local_value(j + 1, 0.0)));
    defect.slope = std::max(defect.slope,
                            std::abs(spline.local_derivative(j, len) -
                                     spline.local_derivative(j + 1, 0.0)));
  }
  defect.end_slope =
      std::max(std::abs(spline.local_derivative(0, 0.0)),
               std::abs(spline.local_derivative(n - 1, spline.length(n - 1))));
  return defect;
}

}  // namespace spiral
