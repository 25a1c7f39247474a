#include "support.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossfam/generate.hpp"
#include "crossfam/random.hpp"

namespace testsupport {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

PointSet random_points(std::size_t n, std::uint64_t seed, std::int64_t range) {
  return crossfam::generate_points(crossfam::PointKind::RandomDisk, n, seed, range);
}

SeparatedPair random_separated_pair(std::size_t na, std::size_t nb, std::uint64_t seed, std::int64_t range) {
  crossfam::Rng rng(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    PointSet v = random_points(na + nb, seed * 7919 + attempt, range);
    const std::int64_t dx = rng.between(-5, 5), dy = rng.between(-5, 5);
    if (dx == 0 && dy == 0) continue;
    std::vector<VertexId> order(v.size());
    for (VertexId i = 0; i < v.size(); ++i) order[i] = i;
    auto key = [&](VertexId i) { return dx * v[i].x + dy * v[i].y; };
    std::sort(order.begin(), order.end(), [&](VertexId l, VertexId r) { return key(l) < key(r) || (key(l) == key(r) && l < r); });
    if (key(order[na - 1]) == key(order[na])) continue;
    SeparatedPair p{v, {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(na)},
                    {order.begin() + static_cast<std::ptrdiff_t>(na), order.end()}};
    std::sort(p.a.begin(), p.a.end());
    std::sort(p.b.begin(), p.b.end());
    return p;
  }
}

SeparatedPair far_pair(std::size_t na, std::size_t nb, std::uint64_t seed) {
  crossfam::Rng rng(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    PointSet sa = random_points(na, seed * 31 + attempt, 1000);
    PointSet sb = random_points(nb, seed * 37 + attempt + 1, 1000);
    const std::int64_t ox = rng.between(-20000, 20000), oy = rng.between(30000, 60000);
    std::vector<Point> pts(sa.begin(), sa.end());
    for (const Point& p : sb) pts.push_back({p.x + ox, p.y + oy});
    if (!std::holds_alternative<crossfam::GeneralPosition>(crossfam::general_position_check(pts))) continue;
    SeparatedPair p{PointSet(pts), {}, {}};
    for (VertexId i = 0; i < na; ++i) p.a.push_back(i);
    for (VertexId i = 0; i < nb; ++i) p.b.push_back(static_cast<VertexId>(na + i));
    return p;
  }
}

SeparatedPair parabola_pair(std::size_t m, std::int64_t w) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t h = 10 * mm * mm + 10;
  std::vector<Point> pts;
  for (std::int64_t i = 0; i < mm; ++i) pts.push_back({i * w, i * i});
  for (std::int64_t i = 0; i < mm; ++i) pts.push_back({i * w, h - i * i});
  SeparatedPair p{PointSet(pts), {}, {}};
  for (VertexId i = 0; i < m; ++i) {
    p.a.push_back(i);
    p.b.push_back(static_cast<VertexId>(m + i));
  }
  return p;
}

namespace {

Q frac(const Z& num, const Z& den) { return den < 0 ? Q(Z(-num), Z(-den)) : Q(num, den); }

// Parameters (s, t) with a + s(b - a) = c + t(d - c); nullopt if parallel.
std::optional<std::pair<Q, Q>> intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Z rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const Z den = rx * sy - ry * sx;
  if (den == 0) return std::nullopt;
  const Z qx = c.x - a.x, qy = c.y - a.y;
  return std::pair(frac(qx * sy - qy * sx, den), frac(qx * ry - qy * rx, den));
}

}  // namespace

bool naive_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto st = intersect(a, b, c, d);
  if (!st) return false;
  return st->first > 0 && st->first < 1 && st->second > 0 && st->second < 1;
}

bool naive_avoiding(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto st = intersect(a, b, c, d);
  if (!st) return true;
  // Line(ab) meets closed cd iff t in [0, 1]; line(cd) meets closed ab iff s in [0, 1].
  return !(st->second >= 0 && st->second <= 1) && !(st->first >= 0 && st->first <= 1);
}

bool naive_related(const Segment& s, const Segment& t, const PointSet& v, FamilyMode mode) {
  return mode == FamilyMode::Crossing ? naive_cross(v[s.a], v[s.b], v[t.a], v[t.b])
                                      : naive_avoiding(v[s.a], v[s.b], v[t.a], v[t.b]);
}

Cmp naive_less(const Point& x, const Point& y, const std::vector<Point>& b) {
  int left = 0, right = 0;
  for (const Point& p : b) {
    const Z det = Z(y.x - x.x) * (p.y - x.y) - Z(y.y - x.y) * (p.x - x.x);
    if (det > 0) ++left;
    else if (det < 0) ++right;
  }
  if (left == static_cast<int>(b.size())) return Cmp::Less;
  if (right == static_cast<int>(b.size())) return Cmp::Greater;
  return Cmp::Incomparable;
}

std::uint64_t naive_zone_count(const std::vector<Line>& lines, const Line& ell, const PointSet& v) {
  if (std::find(lines.begin(), lines.end(), ell) != lines.end()) return 0;
  auto big = [](__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    Z r = Z(static_cast<unsigned long long>(u >> 64));
    r <<= 64;
    r += Z(static_cast<unsigned long long>(u & ~0ULL));
    return neg ? Z(-r) : r;
  };
  const Z a = ell.a, b = ell.b, cc = big(ell.c);
  // ell: a x + b y + c = 0, parametrized as p0 + s (-b, a).
  Q px, py;
  if (b != 0) {
    px = 0;
    py = frac(-cc, b);
  } else {
    px = frac(-cc, a);
    py = 0;
  }
  const Q dx = Q(-b), dy = Q(a);
  std::vector<Q> params;
  for (const Line& l : lines) {
    const Q la = Q(Z(l.a)), lb = Q(Z(l.b)), lc = Q(big(l.c));
    const Q den = la * dx + lb * dy;
    if (den == 0) continue;
    params.push_back(-(la * px + lb * py + lc) / den);
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  std::vector<Q> samples;
  if (params.empty()) {
    samples.push_back(0);
  } else {
    samples.push_back(params.front() - 1);
    for (std::size_t i = 0; i + 1 < params.size(); ++i) samples.push_back((params[i] + params[i + 1]) / 2);
    samples.push_back(params.back() + 1);
  }
  auto sign_of = [](const Q& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); };
  std::set<std::vector<int>> cells;
  for (const Q& s : samples) {
    const Q x = px + s * dx, y = py + s * dy;
    std::vector<int> sig;
    for (const Line& l : lines) sig.push_back(sign_of(Q(Z(l.a)) * x + Q(Z(l.b)) * y + Q(big(l.c))));
    cells.insert(sig);
  }
  std::uint64_t count = 0;
  for (const Point& p : v) {
    std::vector<int> sig;
    bool on = false;
    for (const Line& l : lines) {
      const Z val = Z(l.a) * p.x + Z(l.b) * p.y + big(l.c);
      const int sgn = val > 0 ? 1 : (val < 0 ? -1 : 0);
      if (sgn == 0) on = true;
      sig.push_back(sgn);
    }
    if (!on && cells.count(sig)) ++count;
  }
  return count;
}

namespace {

void extend(const GeometricGraph& g, FamilyMode mode, std::size_t from, std::vector<Segment>& chosen, std::size_t& best) {
  best = std::max(best, chosen.size());
  const auto edges = g.edges();
  if (chosen.size() + (edges.size() - from) <= best) return;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Segment s{edges[i].u, edges[i].v};
    bool ok = true;
    for (const Segment& t : chosen) {
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b || !naive_related(s, t, g.vertices(), mode)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(s);
    extend(g, mode, i + 1, chosen, best);
    chosen.pop_back();
  }
}

}  // namespace

std::size_t naive_max_family(const GeometricGraph& g, FamilyMode mode) {
  std::vector<Segment> chosen;
  std::size_t best = 0;
  extend(g, mode, 0, chosen, best);
  return best;
}

}  // namespace testsupport
