#pragma once

#include <cstdint>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/geom.hpp"
#include "crossfam/poset.hpp"
#include "crossfam/zones.hpp"

namespace testsupport {

using crossfam::Cmp;
using crossfam::FamilyMode;
using crossfam::GeometricGraph;
using crossfam::Line;
using crossfam::Point;
using crossfam::PointSet;
using crossfam::Segment;
using crossfam::VertexId;

PointSet random_points(std::size_t n, std::uint64_t seed, std::int64_t range = 1000);

struct SeparatedPair {
  PointSet v;
  std::vector<VertexId> a, b;
};

/// Random points cut by a random direction into |A| = na, |B| = nb.
SeparatedPair random_separated_pair(std::size_t na, std::size_t nb, std::uint64_t seed, std::int64_t range = 1000);

/// A in a small disk, B in a small disk far away: nearly total orders.
SeparatedPair far_pair(std::size_t na, std::size_t nb, std::uint64_t seed);

/// A = {(i w, i^2)}, B = {(i w, H - i^2)}, i < m, with H large: both
/// orders total, so the pair is 0-avoiding.
SeparatedPair parabola_pair(std::size_t m, std::int64_t w = 1);

/// Intersection by rational line solving: open segments share a point.
bool naive_cross(const Point& a, const Point& b, const Point& c, const Point& d);
/// Neither closed segment meets the other's supporting line, by rational
/// intersection parameters.
bool naive_avoiding(const Point& a, const Point& b, const Point& c, const Point& d);
bool naive_related(const Segment& s, const Segment& t, const PointSet& v, FamilyMode mode);

/// x <_B y straight from the definition over every point of B.
Cmp naive_less(const Point& x, const Point& y, const std::vector<Point>& b);

/// Points whose open cell meets ell, found by sampling ell between
/// consecutive crossings with lines of L in exact rationals.
std::uint64_t naive_zone_count(const std::vector<Line>& lines, const Line& ell, const PointSet& v);

/// Largest family by exhaustive recursion over edges; tiny graphs only.
std::size_t naive_max_family(const GeometricGraph& g, FamilyMode mode);

}  // namespace testsupport
