#include <gtest/gtest.h>

#include <cmath>

#include "crossfam/errors.hpp"
#include "crossfam/generate.hpp"

using namespace crossfam;

namespace {

std::vector<Point> pts(const PointSet& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(GeneratePoints, AllKindsInGeneralPositionAndInRange) {
  for (PointKind kind : {PointKind::RandomDisk, PointKind::Convex, PointKind::GridJitter}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      PointSet v = generate_points(kind, 50, seed, 10000);
      ASSERT_EQ(v.size(), 50u);
      EXPECT_TRUE(std::holds_alternative<GeneralPosition>(general_position_check(pts(v))));
      for (const Point& p : v) {
        EXPECT_LE(std::abs(p.x), 10000);
        EXPECT_LE(std::abs(p.y), 10000);
      }
    }
  }
}

TEST(GeneratePoints, Deterministic) {
  for (PointKind kind : {PointKind::RandomDisk, PointKind::Convex, PointKind::GridJitter}) {
    EXPECT_EQ(pts(generate_points(kind, 30, 7)), pts(generate_points(kind, 30, 7)));
    EXPECT_NE(pts(generate_points(kind, 30, 7)), pts(generate_points(kind, 30, 8)));
  }
}

TEST(GeneratePoints, RandomDiskStaysInDisk) {
  PointSet v = generate_points(PointKind::RandomDisk, 200, 3, 500);
  for (const Point& p : v) EXPECT_LE(p.x * p.x + p.y * p.y, 500 * 500);
}

TEST(GeneratePoints, ConvexPointsAreInConvexPosition) {
  PointSet v = generate_points(PointKind::Convex, 40, 1);
  EXPECT_EQ(convex_hull(pts(v)).size(), 40u);
  for (const Point& p : v) EXPECT_EQ(p.y, p.x * p.x - 1000 * 1000);
}

TEST(GeneratePoints, RangeTooSmall) {
  EXPECT_THROW(generate_points(PointKind::Convex, 10, 0, 9), RangeTooSmall);
  EXPECT_THROW(generate_points(PointKind::RandomDisk, 40, 0, 2), RangeTooSmall);
  EXPECT_THROW(generate_points(PointKind::GridJitter, 400, 0, 20), RangeTooSmall);
  EXPECT_THROW(generate_points(PointKind::RandomDisk, 1, 0), PreconditionViolated);
  EXPECT_THROW(generate_points(PointKind::RandomDisk, 5, 0, 0), PreconditionViolated);
}

TEST(PointKind, ParseAndPrint) {
  for (PointKind kind : {PointKind::RandomDisk, PointKind::Convex, PointKind::GridJitter}) {
    EXPECT_EQ(parse_point_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_point_kind("spiral"), Error);
}
