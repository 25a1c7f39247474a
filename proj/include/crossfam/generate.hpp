#pragma once

#include <cstdint>
#include <string>

#include "crossfam/geom.hpp"

namespace crossfam {

enum class PointKind { RandomDisk, Convex, GridJitter };

std::string to_string(PointKind kind);
PointKind parse_point_kind(const std::string& text);

inline constexpr std::int64_t kDefaultRange = 1000000;

/// n points with coordinates in [-range, range], no three collinear,
/// deterministic in seed.  Convex points lie on y = x^2 - w^2 with
/// |x| <= w = floor(sqrt(range)).  Throws RangeTooSmall when general
/// position cannot be reached.
PointSet generate_points(PointKind kind, std::size_t n, std::uint64_t seed, std::int64_t range = kDefaultRange);

}  // namespace crossfam
