#include "crossfam/clusters.hpp"

#include <algorithm>
#include <map>

#include "crossfam/errors.hpp"

namespace crossfam {

ClusterDecomposition build_clusters(const PointSet& v, ZoneLineSet lines, std::size_t m) {
  if (m == 0) throw PreconditionViolated("cluster size must be positive");
  ClusterDecomposition d;
  d.m = m;
  d.lines = std::move(lines);

  std::map<std::vector<std::int8_t>, std::vector<VertexId>> by_cell;
  for (VertexId p = 0; p < v.size(); ++p) {
    std::vector<std::int8_t> signs;
    signs.reserve(d.lines.lines.size());
    bool on_line = false;
    for (const Line& line : d.lines.lines) {
      const int s = side_of(line, v[p]);
      if (s == 0) {
        on_line = true;
        break;
      }
      signs.push_back(static_cast<std::int8_t>(s));
    }
    if (on_line) {
      d.on_lines.push_back(p);
      d.leftover.push_back(p);
    } else {
      by_cell[std::move(signs)].push_back(p);
    }
  }

  for (auto& [signs, members] : by_cell) {
    std::sort(members.begin(), members.end(), [&](VertexId l, VertexId r) { return v[l] < v[r]; });
    const std::size_t full = members.size() / m;

    // Vertical splitters unless two points adjacent across a cut share an
    // abscissa; then tilt to K*x + y, which orders the cell exactly as (x, y).
    std::int64_t fx = 1, fy = 0;
    for (std::size_t c = 1; c < full + (members.size() % m ? 1 : 0); ++c) {
      if (v[members[c * m - 1]].x == v[members[c * m]].x) {
        std::int64_t ymin = v[members.front()].y, ymax = ymin;
        for (VertexId p : members) {
          ymin = std::min(ymin, v[p].y);
          ymax = std::max(ymax, v[p].y);
        }
        fx = ymax - ymin + 1;
        fy = 1;
        break;
      }
    }
    auto value2 = [&](VertexId p, VertexId q) -> __int128 {
      return static_cast<__int128>(fx) * (v[p].x + v[q].x) + static_cast<__int128>(fy) * (v[p].y + v[q].y);
    };

    for (std::size_t c = 0; c < full; ++c) {
      ClusterCell cell;
      cell.signs = signs;
      cell.fx = fx;
      cell.fy = fy;
      if (c > 0) cell.lower2 = value2(members[c * m - 1], members[c * m]);
      if (c * m + m < members.size()) cell.upper2 = value2(members[c * m + m - 1], members[c * m + m]);
      d.clusters.emplace_back(members.begin() + static_cast<std::ptrdiff_t>(c * m),
                              members.begin() + static_cast<std::ptrdiff_t>(c * m + m));
      d.cells.push_back(std::move(cell));
    }
    d.leftover.insert(d.leftover.end(), members.begin() + static_cast<std::ptrdiff_t>(full * m), members.end());
  }
  std::sort(d.leftover.begin(), d.leftover.end());
  return d;
}

bool is_dense(const PairStats& s, const Rational& delta, std::size_t m) {
  return at_least(s.edge_count, delta, static_cast<std::uint64_t>(m) * m);
}

bool is_avoiding(const PairStats& s, const Rational& eps, std::size_t m) {
  return at_most(s.iota_sum, eps, static_cast<std::uint64_t>(m) * m);
}

std::vector<PairStats> pair_statistics(const GeometricGraph& g, const ClusterDecomposition& d) {
  const PointSet& v = g.vertices();
  std::vector<std::vector<Point>> hulls;
  hulls.reserve(d.clusters.size());
  for (const auto& c : d.clusters) hulls.push_back(convex_hull(v.gather(c)));

  // iota(A, <_B) only needs the hull vertices of B.
  auto iota_against = [&](const std::vector<VertexId>& side, const std::vector<Point>& hull) {
    std::uint64_t count = 0;
    for (std::size_t x = 0; x < side.size(); ++x) {
      for (std::size_t y = x + 1; y < side.size(); ++y) {
        if (line_meets_hull(v[side[x]], v[side[y]], hull)) ++count;
      }
    }
    return count;
  };

  std::vector<PairStats> stats;
  for (std::size_t i = 0; i < d.clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < d.clusters.size(); ++j) {
      PairStats s{i, j, g.edges_between(d.clusters[i], d.clusters[j]), 0};
      s.iota_sum = iota_against(d.clusters[i], hulls[j]) + iota_against(d.clusters[j], hulls[i]);
      stats.push_back(s);
    }
  }
  return stats;
}

std::optional<std::pair<std::size_t, std::size_t>> select_pair(const std::vector<PairStats>& stats,
                                                              const Rational& eps, const Rational& delta,
                                                              std::size_t m) {
  const PairStats* best = nullptr;
  for (const PairStats& s : stats) {
    if (!is_dense(s, delta, m) || !is_avoiding(s, eps, m)) continue;
    if (best == nullptr || s.edge_count > best->edge_count ||
        (s.edge_count == best->edge_count && std::pair(s.i, s.j) < std::pair(best->i, best->j))) {
      best = &s;
    }
  }
  if (best == nullptr) return std::nullopt;
  return std::pair(best->i, best->j);
}

EdgeCategories classify_edges(const GeometricGraph& g, const ClusterDecomposition& d,
                              const std::vector<PairStats>& stats, const Rational& delta) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(g.vertex_count(), kNone);
  for (std::size_t c = 0; c < d.clusters.size(); ++c) {
    for (VertexId p : d.clusters[c]) owner[p] = c;
  }
  const std::size_t count = d.clusters.size();
  std::vector<char> dense(count * count, 0);
  for (const PairStats& s : stats) {
    dense[s.i * count + s.j] = dense[s.j * count + s.i] = is_dense(s, delta, d.m) ? 1 : 0;
  }
  EdgeCategories cat;
  for (const Edge& e : g.edges()) {
    const std::size_t a = owner[e.u], b = owner[e.v];
    if (a == kNone || b == kNone) ++cat.leftover;
    else if (a == b) ++cat.intra_cluster;
    else if (dense[a * count + b]) ++cat.dense_pair;
    else ++cat.sparse_pair;
  }
  return cat;
}

std::size_t capped_net_size(std::size_t n, std::size_t m) {
  std::size_t q = 0;
  for (std::size_t next = 2;; ++next) {
    const std::size_t lines = next * (next - 1) / 2;
    if (lines * lines * 4 * m > n) break;
    q = next;
  }
  return q;
}

std::optional<DensePair> find_avoiding_dense_pair(const GeometricGraph& g, std::size_t m, const Rational& eps,
                                                  const Rational& delta, std::uint64_t seed,
                                                  const ZonePolicy& policy) {
  const PointSet& v = g.vertices();
  if (v.size() < 2) throw PreconditionViolated("need at least two vertices");
  if (m == 0 || eps <= Rational(0) || delta <= Rational(0)) throw PreconditionViolated("parameters must be positive");
  if (v.size() < 2 * m || g.edge_count() == 0) return std::nullopt;

  Rational zone_eps = eps * delta / Rational(2);
  if (zone_eps > Rational(1)) zone_eps = Rational(1);
  // A full net puts every point on a line of L: no cluster can form.
  if (policy.mode == ZonePolicy::Mode::Verified && net_sample_size(v.size(), zone_eps, policy.net_constant) >= v.size()) {
    return std::nullopt;
  }
  ZoneLineSet lines = policy.mode == ZonePolicy::Mode::Verified
                          ? build_zone_lines(v, zone_eps, seed, policy.audit, {policy.net_constant, kZoneAttempts})
                          : unverified_zone_lines(v, zone_eps, seed, capped_net_size(v.size(), m), policy.net_constant);

  ClusterDecomposition d = build_clusters(v, std::move(lines), m);
  std::vector<PairStats> stats = pair_statistics(g, d);
  auto chosen = select_pair(stats, eps, delta, m);
  if (!chosen) return std::nullopt;

  DensePair out;
  out.cluster_a = chosen->first;
  out.cluster_b = chosen->second;
  for (const PairStats& s : stats) {
    if (s.i == chosen->first && s.j == chosen->second) out.stats = s;
  }
  out.poset = build_pair_poset(d.clusters[chosen->first], d.clusters[chosen->second], v);
  return out;
}

}  // namespace crossfam
