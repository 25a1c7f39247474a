#include "crossfam/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crossfam/errors.hpp"
#include "crossfam/random.hpp"

namespace crossfam {
namespace {

constexpr int kAttemptsPerPoint = 1000;

// Reduced direction of q - p up to sign.
std::pair<std::int64_t, std::int64_t> direction(const Point& p, const Point& q) {
  std::int64_t dx = q.x - p.x, dy = q.y - p.y;
  const std::int64_t g = std::gcd(dx, dy);
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy};
}

// p can join pts without creating a duplicate or a collinear triple.
bool admissible(const std::vector<Point>& pts, const Point& p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
  dirs.reserve(pts.size());
  for (const Point& q : pts) {
    if (q == p) return false;
    dirs.push_back(direction(p, q));
  }
  std::sort(dirs.begin(), dirs.end());
  return std::adjacent_find(dirs.begin(), dirs.end()) == dirs.end();
}

template <class Draw>
PointSet rejection(std::size_t n, Draw draw) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttemptsPerPoint && !placed; ++attempt) {
      Point p = draw(i);
      if (admissible(pts, p)) {
        pts.push_back(p);
        placed = true;
      }
    }
    if (!placed) throw RangeTooSmall("could not place point " + std::to_string(i) + " in general position");
  }
  return PointSet(std::move(pts));
}

}  // namespace

std::string to_string(PointKind kind) {
  switch (kind) {
    case PointKind::RandomDisk: return "random-disk";
    case PointKind::Convex: return "convex";
    case PointKind::GridJitter: return "grid-jitter";
  }
  return "unknown";
}

PointKind parse_point_kind(const std::string& text) {
  if (text == "random-disk") return PointKind::RandomDisk;
  if (text == "convex") return PointKind::Convex;
  if (text == "grid-jitter") return PointKind::GridJitter;
  throw Error("unknown point kind '" + text + "'");
}

PointSet generate_points(PointKind kind, std::size_t n, std::uint64_t seed, std::int64_t range) {
  if (n < 2) throw PreconditionViolated("need at least two points");
  if (range < 1 || range > kMaxCoordinate) throw PreconditionViolated("range must lie in [1, 2^31 - 1]");
  Rng rng(seed);

  switch (kind) {
    case PointKind::RandomDisk: {
      const auto r2 = static_cast<__int128>(range) * range;
      return rejection(n, [&](std::size_t) {
        for (;;) {
          Point p{rng.between(-range, range), rng.between(-range, range)};
          if (static_cast<__int128>(p.x) * p.x + static_cast<__int128>(p.y) * p.y <= r2) return p;
        }
      });
    }
    case PointKind::Convex: {
      const auto w = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(range)));
      const auto slots = static_cast<std::uint64_t>(2 * w + 1);
      if (slots < n) throw RangeTooSmall("convex arc holds only " + std::to_string(slots) + " points");
      std::vector<Point> pts;
      for (std::uint32_t i : rng.sample(static_cast<std::uint32_t>(slots), static_cast<std::uint32_t>(n))) {
        const std::int64_t x = static_cast<std::int64_t>(i) - w;
        pts.push_back({x, x * x - w * w});
      }
      return PointSet(std::move(pts));
    }
    case PointKind::GridJitter: {
      auto side = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      const std::int64_t spacing = 2 * range / static_cast<std::int64_t>(side);
      const std::int64_t jitter = spacing / 4;
      if (spacing < 4) throw RangeTooSmall("grid spacing below 4");
      std::vector<std::uint32_t> cells =
          rng.sample(static_cast<std::uint32_t>(side * side), static_cast<std::uint32_t>(n));
      return rejection(n, [&](std::size_t i) {
        const std::int64_t cx = -range + spacing / 2 + spacing * static_cast<std::int64_t>(cells[i] % side);
        const std::int64_t cy = -range + spacing / 2 + spacing * static_cast<std::int64_t>(cells[i] / side);
        return Point{cx + rng.between(-jitter, jitter), cy + rng.between(-jitter, jitter)};
      });
    }
  }
  throw Error("unknown point kind");
}

}  // namespace crossfam
