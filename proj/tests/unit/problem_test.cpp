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
#include "spiral/error.hpp"
#include "spiral/problem.hpp"

namespace spiral {
namespace {

using testing::circle;
using testing::three_point;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvalidArgument;
}

TEST(MakeProblemTest, StructuralErrors) {
  EXPECT_EQ(kind_of([] { make_problem({0, 1}, {{0, 0}, {1, 0}}); }),
            ErrorKind::kCountMismatch);
  EXPECT_EQ(kind_of([] { make_problem({0, 1, 2}, {{0, 0}, {1, 0}}); }),
            ErrorKind::kCountMismatch);
  EXPECT_EQ(kind_of([] {
              make_problem({0, 0.5, 0.5}, {{0, 0}, {0.4, 0.1}, {0.8, 0}});
            }),
            ErrorKind::kNonMonotoneTimes);
}

TEST(ValidateTest, ThreePointChordData) {
  // r and k from a hand calculation of |Y_1 - Y_0| / L and
  // sqrt(12 (1 - r^2)) / (L r).
  const ChordData c = validate(three_point(1.1));
  EXPECT_DOUBLE_EQ(c.lengths[0], 0.5);
  EXPECT_NEAR(c.radii[0], 0.98954535, 1e-7);
  EXPECT_NEAR(c.curvatures[0], 1.00976, 1e-5);
}

TEST(ValidateTest, ThreePointAsGivenHasAnOverlongChord) {
  try {
    validate(three_point());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kChordTooLong);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(ValidateTest, CollinearUnitSpeedDataIsTooLong) {
  const auto p = make_problem({0, 1, 2}, {{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::kChordTooLong);
}

TEST(ValidateTest, NearlyStraightDataHasTooLittleCurvature) {
  const auto p = make_problem({0, 1, 2}, {{0, 0}, {0.99999999, 0}, {1.99999998, 0}});
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::kCurvatureTooSmall);
}

TEST(ValidateTest, GapRatioBand) {
  const auto p = make_problem({0, 0.05, 2, 4},
                              {{0, 0}, {0.04, 0.01}, {1.5, 0.8}, {2.5, 0.0}});
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::kGapRatio);
}

TEST(ValidateTest, CoincidentWaypoints) {
  const auto p = make_problem({0, 1, 2}, {{0, 0}, {0, 0}, {1, 0}});
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::kZeroChord);
}

TEST(ValidateTest, CircleChordsAreUniform) {
  const ChordData c = validate(circle(7));
  ASSERT_EQ(c.size(), 7u);
  const double h = std::numbers::pi / 10;
  // Chord of a unit circle over angle h: 2 sin(h / 2).
  const double r = 2 * std::sin(h / 2) / h;
  for (std::size_t j = 0; j < 7; ++j) {
    EXPECT_NEAR(c.radii[j], r, 1e-13);
    EXPECT_NEAR(c.curvatures[j], c.curvatures[0], 1e-10);
    if (j > 0) {
      EXPECT_NEAR(c.angles[j] - c.angles[j - 1], h, 1e-13);
    }
  }
}

TEST(UnwrapAnglesTest, EqualChordsGiveZero) {
  const std::vector<Vec2> chords(4, Vec2{1, 0});
  for (double w : unwrap_angles(chords)) EXPECT_EQ(w, 0.0);
}

TEST(UnwrapAnglesTest, PicksTheLiftNearestThePredecessor) {
  const std::vector<Vec2> chords{{0, 1}, {-1e-3, -1}};
  const auto w = unwrap_angles(chords);
  EXPECT_NEAR(w[0], std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(w[1], 1.5 * std::numbers::pi, 1.1e-3);
}

TEST(UnwrapAnglesTest, ExactHalfTurnResolvesUpward) {
  const auto w = unwrap_angles(std::vector<Vec2>{{1, 0}, {-1, 0}});
  EXPECT_NEAR(w[1], std::numbers::pi, 1e-15);
}

TEST(UnwrapAnglesTest, ZeroChord) {
  EXPECT_EQ(kind_of([] { unwrap_angles(std::vector<Vec2>{{1, 0}, {0, 0}}); }),
            ErrorKind::kZeroChord);
}

TEST(UnwrapAnglesTest, RandomChordsReproduceDirectionsAndStepByAtMostPi) {
  auto rng = testing::make_rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vec2> chords;
    const auto n = testing::uniform_size(rng, 1, 12);
    for (std::size_t j = 0; j < n; ++j) {
      chords.push_back(unit(testing::uniform(rng, -10, 10)) *
                       testing::uniform(rng, 0.1, 3));
    }
    const auto w = unwrap_angles(chords);
    EXPECT_GT(w[0], -std::numbers::pi);
    EXPECT_LE(w[0], std::numbers::pi);
    for (std::size_t j = 0; j < n; ++j) {
      const double r = chords[j].norm();
      EXPECT_NEAR(r * std::cos(w[j]), chords[j].x, 1e-12);
      EXPECT_NEAR(r * std::sin(w[j]), chords[j].y, 1e-12);
      if (j > 0) {
        EXPECT_LE(std::abs(w[j] - w[j - 1]), std::numbers::pi + 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace spiral
