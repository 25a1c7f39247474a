#include "crossfam/geom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crossfam/errors.hpp"

namespace crossfam {
namespace {

std::string describe(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

void check_coordinates(std::span<const Point> points) {
  for (const Point& p : points) {
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
      throw Error("coordinate out of range at " + describe(p));
    }
  }
}

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool closed_segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  Orientation o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  Orientation o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
    return true;
  }
  return on_closed_segment(a, b, c) || on_closed_segment(a, b, d) || on_closed_segment(c, d, a) ||
         on_closed_segment(c, d, b);
}

bool in_closed_hull(const Point& p, std::span<const Point> hull) {
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) return on_closed_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], p) == Orientation::CW) return false;
  }
  return true;
}

// Four orientations of two segments with pairwise distinct endpoints;
// throws on any collinear triple.
struct QuadSigns {
  Orientation abc, abd, cda, cdb;
};

QuadSigns quad_signs(const Point& a, const Point& b, const Point& c, const Point& d) {
  QuadSigns s{orientation(a, b, c), orientation(a, b, d), orientation(c, d, a), orientation(c, d, b)};
  if (s.abc == Orientation::Collinear || s.abd == Orientation::Collinear || s.cda == Orientation::Collinear ||
      s.cdb == Orientation::Collinear) {
    throw DegenerateInput("collinear endpoints among " + describe(a) + describe(b) + " and " + describe(c) +
                          describe(d));
  }
  return s;
}

bool shares_endpoint(const Point& a, const Point& b, const Point& c, const Point& d) {
  return a == c || a == d || b == c || b == d;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

__int128 orient_det(const Point& p, const Point& q, const Point& r) {
  return static_cast<__int128>(q.x - p.x) * (r.y - p.y) - static_cast<__int128>(q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  __int128 d = orient_det(p, q, r);
  if (d > 0) return Orientation::CCW;
  if (d < 0) return Orientation::CW;
  return Orientation::Collinear;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  check_coordinates(points_);
  PositionCheck check = general_position_check(points_);
  if (auto* dup = std::get_if<DuplicateWitness>(&check)) {
    throw DegenerateInput("duplicate points " + std::to_string(dup->first) + " and " + std::to_string(dup->second));
  }
  if (auto* col = std::get_if<CollinearWitness>(&check)) {
    throw DegenerateInput("collinear points " + std::to_string(col->first) + ", " + std::to_string(col->second) +
                          ", " + std::to_string(col->third));
  }
}

PointSet PointSet::unchecked(std::vector<Point> points) {
  check_coordinates(points);
  PointSet s;
  s.points_ = std::move(points);
  return s;
}

std::vector<Point> PointSet::gather(std::span<const VertexId> ids) const {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (VertexId i : ids) out.push_back(points_.at(i));
  return out;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (shares_endpoint(a, b, c, d)) return false;
  QuadSigns s = quad_signs(a, b, c, d);
  return s.abc != s.abd && s.cda != s.cdb;
}

bool segments_cross(const Segment& s1, const Segment& s2, const PointSet& v) {
  return segments_cross(v[s1.a], v[s1.b], v[s2.a], v[s2.b]);
}

bool segments_avoiding(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (shares_endpoint(a, b, c, d)) return false;
  QuadSigns s = quad_signs(a, b, c, d);
  return s.abc == s.abd && s.cda == s.cdb;
}

bool segments_avoiding(const Segment& s1, const Segment& s2, const PointSet& v) {
  return segments_avoiding(v[s1.a], v[s1.b], v[s2.a], v[s2.b]);
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Andrew's monotone chain, strict turns only.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) != Orientation::CCW) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p) != Orientation::CCW) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  // All points collinear: the chain collapses to the two extremes.
  return hull;
}

bool hulls_disjoint(std::span<const Point> a, std::span<const Point> b) {
  std::vector<Point> ha = convex_hull(a);
  std::vector<Point> hb = convex_hull(b);
  for (const Point& p : ha) {
    if (in_closed_hull(p, hb)) return false;
  }
  for (const Point& p : hb) {
    if (in_closed_hull(p, ha)) return false;
  }
  auto edge_count = [](const std::vector<Point>& h) -> std::size_t {
    return h.size() < 2 ? 0 : (h.size() == 2 ? 1 : h.size());
  };
  const std::size_t ea = edge_count(ha), eb = edge_count(hb);
  for (std::size_t i = 0; i < ea; ++i) {
    const Point& p = ha[i];
    const Point& q = ha[(i + 1) % ha.size()];
    for (std::size_t j = 0; j < eb; ++j) {
      if (closed_segments_intersect(p, q, hb[j], hb[(j + 1) % hb.size()])) return false;
    }
  }
  return true;
}

bool line_meets_hull(const Point& x, const Point& y, std::span<const Point> b) {
  bool left = false, right = false;
  for (const Point& p : b) {
    switch (orientation(x, y, p)) {
      case Orientation::Collinear: return true;
      case Orientation::CCW: left = true; break;
      case Orientation::CW: right = true; break;
    }
    if (left && right) return true;
  }
  return false;
}

PositionCheck general_position_check(std::span<const Point> points) {
  const auto n = static_cast<VertexId>(points.size());

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId i, VertexId j) { return points[i] < points[j]; });
  std::optional<DuplicateWitness> dup;
  for (VertexId i = 0; i + 1 < n; ++i) {
    if (points[order[i]] == points[order[i + 1]]) {
      // Stable sort keeps equal points in index order, so order[i] is the
      // smallest index of its group only at the group start.
      if (i > 0 && points[order[i - 1]] == points[order[i]]) continue;
      DuplicateWitness w{order[i], order[i + 1]};
      if (!dup || std::pair(w.first, w.second) < std::pair(dup->first, dup->second)) dup = w;
    }
  }
  if (dup) return *dup;

  struct Dir {
    std::int64_t dx, dy;
    VertexId q;
  };
  std::vector<Dir> dirs;
  for (VertexId p = 0; p < n; ++p) {
    dirs.clear();
    for (VertexId q = p + 1; q < n; ++q) {
      std::int64_t dx = points[q].x - points[p].x, dy = points[q].y - points[p].y;
      std::int64_t g = gcd64(dx, dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, q});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& l, const Dir& r) {
      return std::tie(l.dx, l.dy, l.q) < std::tie(r.dx, r.dy, r.q);
    });
    std::optional<CollinearWitness> best;
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
      if (dirs[i].dx == dirs[i + 1].dx && dirs[i].dy == dirs[i + 1].dy) {
        if (i > 0 && dirs[i - 1].dx == dirs[i].dx && dirs[i - 1].dy == dirs[i].dy) continue;
        CollinearWitness w{p, dirs[i].q, dirs[i + 1].q};
        if (!best || std::pair(w.second, w.third) < std::pair(best->second, best->third)) best = w;
      }
    }
    if (best) return *best;
  }
  return GeneralPosition{};
}

GeometricGraph::GeometricGraph(PointSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const auto n = vertices_.size();
  for (Edge& e : edges_) {
    if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n) {
      throw Error("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw Error("duplicate edge");
  complete_ = n >= 2 && edges_.size() == n * (n - 1) / 2;
  build_adjacency();
}

GeometricGraph GeometricGraph::complete(PointSet vertices) {
  GeometricGraph g;
  const auto n = static_cast<VertexId>(vertices.size());
  g.vertices_ = std::move(vertices);
  g.edges_.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.edges_.push_back({i, j});
  }
  g.complete_ = n >= 2;
  return g;
}

void GeometricGraph::build_adjacency() {
  if (complete_) return;
  const std::size_t n = vertices_.size();
  if (n > 16384) return;  // falls back to binary search over edges_
  adjacency_.assign((n * n + 63) / 64, 0);
  for (const Edge& e : edges_) {
    std::size_t i = e.u * n + e.v, j = e.v * n + e.u;
    adjacency_[i / 64] |= std::uint64_t{1} << (i % 64);
    adjacency_[j / 64] |= std::uint64_t{1} << (j % 64);
  }
}

bool GeometricGraph::has_edge(VertexId a, VertexId b) const {
  const std::size_t n = vertices_.size();
  if (a == b || a >= n || b >= n) return false;
  if (complete_) return true;
  if (!adjacency_.empty()) {
    std::size_t i = static_cast<std::size_t>(a) * n + b;
    return (adjacency_[i / 64] >> (i % 64)) & 1U;
  }
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::uint64_t GeometricGraph::edges_between(std::span<const VertexId> a, std::span<const VertexId> b) const {
  if (complete_) return static_cast<std::uint64_t>(a.size()) * b.size();
  std::uint64_t count = 0;
  for (VertexId x : a) {
    for (VertexId y : b) count += has_edge(x, y) ? 1 : 0;
  }
  return count;
}

}  // namespace crossfam
