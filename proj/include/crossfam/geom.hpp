#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace crossfam {

using VertexId = std::uint32_t;

/// Largest admissible coordinate magnitude.  Keeps every orientation
/// determinant of three points inside a signed 128-bit integer.
inline constexpr std::int64_t kMaxCoordinate = 2147483647;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of det(q - p, r - p).  CCW iff r is strictly left of the directed
/// line p -> q.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// The exact determinant behind orientation().
__int128 orient_det(const Point& p, const Point& q, const Point& r);

/// Ordered points with stable indices.  Distinctness and general position
/// are certified on construction unless explicitly waived.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DegenerateInput on duplicates or collinear triples, and Error
  /// on coordinates beyond kMaxCoordinate.
  explicit PointSet(std::vector<Point> points);

  /// Skips the general position certificate (coordinate bounds are still
  /// enforced).  For intermediate sets only.
  static PointSet unchecked(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](VertexId i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::vector<Point> gather(std::span<const VertexId> ids) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

struct Segment {
  VertexId a = 0;
  VertexId b = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Open segments share a point.  Segments sharing an endpoint never cross.
/// Throws DegenerateInput if three of the four endpoints are collinear.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);
bool segments_cross(const Segment& s1, const Segment& s2, const PointSet& v);

/// Each closed segment lies strictly on one side of the other's supporting
/// line.  Same error contract as segments_cross.
bool segments_avoiding(const Point& a, const Point& b, const Point& c, const Point& d);
bool segments_avoiding(const Segment& s1, const Segment& s2, const PointSet& v);

/// Vertices of conv(points) in counterclockwise order starting from the
/// lexicographically smallest point; collinear boundary points are dropped.
/// A single point or a segment is returned as its one or two vertices.
std::vector<Point> convex_hull(std::span<const Point> points);

/// Closed convex hulls are disjoint.  Decided by hull edge intersection and
/// point-in-hull tests.
bool hulls_disjoint(std::span<const Point> a, std::span<const Point> b);

/// The infinite line through x and y meets conv(b).
bool line_meets_hull(const Point& x, const Point& y, std::span<const Point> b);

struct DuplicateWitness {
  VertexId first, second;
  friend bool operator==(const DuplicateWitness&, const DuplicateWitness&) = default;
};
struct CollinearWitness {
  VertexId first, second, third;
  friend bool operator==(const CollinearWitness&, const CollinearWitness&) = default;
};
struct GeneralPosition {
  friend bool operator==(const GeneralPosition&, const GeneralPosition&) = default;
};

using PositionCheck = std::variant<GeneralPosition, DuplicateWitness, CollinearWitness>;

/// Reports the lexicographically smallest duplicate pair if any, otherwise
/// the lexicographically smallest collinear triple.  O(n^2 log n).
PositionCheck general_position_check(std::span<const Point> points);

/// Straight-line graph on a point set.
class GeometricGraph {
 public:
  /// Throws Error on self-loops, duplicates or out-of-range endpoints.
  GeometricGraph(PointSet vertices, std::vector<Edge> edges);
  static GeometricGraph complete(PointSet vertices);

  const PointSet& vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_complete() const { return complete_; }
  bool has_edge(VertexId a, VertexId b) const;

  /// |E(a, b)| for disjoint vertex subsets.
  std::uint64_t edges_between(std::span<const VertexId> a, std::span<const VertexId> b) const;

 private:
  GeometricGraph() = default;
  void build_adjacency();

  PointSet vertices_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
  bool complete_ = false;
};

}  // namespace crossfam
