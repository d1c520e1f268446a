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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "datasets.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "spiral/curve.hpp"
#include "spiral/estimator.hpp"
#include "spiral/refiner.hpp"

namespace spiral {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(EvalCurveTest, ConstantAngleIsAStraightLine) {
  const AngleSpline s({1, 2, 4}, {{}, {}});
  const Vec2 p = eval_curve(s, {3, -1}, 3.5, {});
  EXPECT_NEAR(p.x, 5.5, 1e-14);
  EXPECT_NEAR(p.y, -1, 1e-14);
}

TEST(EvalCurveTest, LinearAngleTracesASemicircle) {
  const AngleSpline s({0, kPi}, {{0, 1, 0, 0}});
  const Vec2 p = eval_curve(s, {0, 0}, kPi, {256, 256});
  EXPECT_NEAR(p.x, 0, 1e-9);
  EXPECT_NEAR(p.y, 2, 1e-9);
}

TEST(EvalCurveTest, FiniteDifferenceSpeedIsOne) {
  auto rng = testing::make_rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testing::random_natural_spline(rng, testing::uniform_size(rng, 2, 6), 2.0);
    const double h = 1e-5;
    for (int k = 0; k < 100; ++k) {
      const double t = testing::uniform(rng, s.start_time() + h, s.end_time() - h);
      const Vec2 d =
          eval_curve(s, {}, t + h, {256, 256}) - eval_curve(s, {}, t - h, {256, 256});
      EXPECT_NEAR(d.norm() / (2 * h), 1.0, 1e-6);
    }
  }
}

TEST(EvalTildeCurveTest, AnchorsEverySegmentAtItsWaypoint) {
  const auto problem = testing::three_point(1.1);
  const auto est = estimate(validate(problem), SignVector({1, 1}));
  for (std::size_t j = 0; j < 2; ++j) {
    const Vec2 p = eval_tilde_curve(est, problem, problem.times[j], {});
    EXPECT_EQ(p, problem.waypoints[j]);
  }
}

TEST(EvalTildeCurveTest, EstimateJumpsAtTheInteriorKnot) {
  const auto problem = testing::three_point(1.1);
  const auto est = estimate(validate(problem), SignVector({1, 1}));
  const double t1 = problem.times[1];
  const Vec2 left = eval_tilde_curve(est, problem, std::nextafter(t1, 0.0), {64, 64});
  EXPECT_GT((left - problem.waypoints[1]).norm(), 1e-3);
}

TEST(EvalTildeCurveTest, MatchesTheCurveOnceGapsAreClosed) {
  const auto problem = testing::five_segment();
  const auto est = estimate(validate(problem), SignVector::parse("--+-+"));
  const auto ref = refine(est, problem);
  const double res = ref.diagnostics.residual;
  const QuadratureConfig quad{4 * ref.diagnostics.subintervals,
                              4 * ref.diagnostics.subintervals};
  for (int i = 0; i <= 60; ++i) {
    const double t = 3.0 * i / 60;
    const Vec2 a = eval_curve(ref.spline, problem.waypoints[0], t, quad);
    const Vec2 b = eval_tilde_curve(ref.spline, problem, t, quad);
    EXPECT_LE((a - b).norm(), 2 * res + 1e-13);
  }
}

TEST(ElasticEnergyTest, ConstantAngleHasNoEnergy) {
  EXPECT_EQ(elastic_energy(AngleSpline({0, 1, 2}, {{1, 0, 0, 0}, {1, 0, 0, 0}})), 0.0);
}

TEST(ElasticEnergyTest, UnitTurningRateOverSevenTenthsPi) {
  const AngleSpline s({0, 0.7 * kPi}, {{0, 1, 0, 0}});
  EXPECT_NEAR(elastic_energy(s), 0.7 * kPi, 1e-14);
}

TEST(ElasticEnergyTest, ClosedFormMatchesSimpsonAndReference) {
  auto rng = testing::make_rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testing::random_cubic_spline(rng, testing::uniform_size(rng, 1, 8));
    const double exact = elastic_energy(s);
    EXPECT_NEAR(simpson_energy(s, 512), exact, 1e-10 * exact);
    EXPECT_NEAR(testing::reference_energy(s), exact, 1e-10 * exact);
  }
}

TEST(ElasticEnergyTest, ExtendedSplinesConvergeAtFourthOrder) {
  const AngleSpline base({0, 1, 2.5}, {{0.2, 0, 1, -0.5}, {0.7, 0.5, -0.4, 0.1}});
  const auto ext = base.with_extension(ExtensionFamily::constant(), {0.3, -0.2});
  const double ref = testing::reference_energy(ext);
  const double e1 = std::abs(simpson_energy(ext, 2) - ref);
  const double e2 = std::abs(simpson_energy(ext, 4) - ref);
  const double e3 = std::abs(simpson_energy(ext, 8) - ref);
  EXPECT_NEAR(e1 / e2, 16, 4);
  EXPECT_NEAR(e2 / e3, 16, 2);
  EXPECT_NEAR(elastic_energy(ext, {512, 512}), ref, 1e-9 * ref);
}

TEST(InterpolationResidualTest, ZeroAngleAgainstCurvedData) {
  const auto problem = testing::five_segment();
  const AngleSpline flat(problem.times, std::vector<CubicSegment>(5));
  EXPECT_GT(interpolation_residual(flat, problem), 0.01);
}

}  // namespace
}  // namespace spiral
