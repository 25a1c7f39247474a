#include "crossfam/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "crossfam/errors.hpp"

namespace crossfam {
namespace {

// Comparison of x, y against the vertices of a hull.
Cmp side_of_hull(const Point& x, const Point& y, std::span<const Point> hull) {
  bool left = false, right = false;
  for (const Point& p : hull) {
    switch (orientation(x, y, p)) {
      case Orientation::Collinear:
        throw DegenerateInput("point of the opposite set lies on a connecting line");
      case Orientation::CCW: left = true; break;
      case Orientation::CW: right = true; break;
    }
    if (left && right) return Cmp::Incomparable;
  }
  return left ? Cmp::Less : Cmp::Greater;
}

OrderTable side_table(std::span<const Point> pts, std::span<const Point> opposite_hull) {
  OrderTable t(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Cmp c = side_of_hull(pts[i], pts[j], opposite_hull);
      if (c == Cmp::Less) t.set_less(i, j);
      else if (c == Cmp::Greater) t.set_less(j, i);
    }
  }
  return t;
}

}  // namespace

OrderTable OrderTable::from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less) {
  OrderTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && less(i, j)) t.set_less(i, j);
    }
  }
  return t;
}

std::size_t OrderTable::incomparable_count(std::size_t x) const {
  std::size_t c = 0;
  for (std::size_t y = 0; y < n_; ++y) {
    if (y != x && at(x, y) == Cmp::Incomparable) ++c;
  }
  return c;
}

std::uint64_t OrderTable::iota() const {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) == Cmp::Incomparable) ++c;
    }
  }
  return c;
}

OrderTable OrderTable::restrict(std::span<const std::size_t> positions) const {
  OrderTable t(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (i != j) t.cells_[i * t.n_ + j] = at(positions[i], positions[j]);
    }
  }
  return t;
}

Cmp less_under(const Point& x, const Point& y, std::span<const Point> b) {
  if (x == y) throw DegenerateInput("less_under needs distinct points");
  if (b.empty()) throw PreconditionViolated("less_under needs a nonempty reference set");
  return side_of_hull(x, y, b);
}

PairPoset build_pair_poset(std::span<const VertexId> a, std::span<const VertexId> b, const PointSet& v,
                           std::size_t size_cap) {
  if (a.empty() || b.empty()) throw PreconditionViolated("pair poset needs nonempty sides");
  if (a.size() > size_cap || b.size() > size_cap) throw TooLarge("pair poset side exceeds size cap");
  std::vector<Point> pa = v.gather(a), pb = v.gather(b);
  if (!hulls_disjoint(pa, pb)) throw NotSeparated("convex hulls of the pair intersect");

  PairPoset p;
  p.a.assign(a.begin(), a.end());
  p.b.assign(b.begin(), b.end());
  p.on_a = side_table(pa, convex_hull(pb));
  p.on_b = side_table(pb, convex_hull(pa));
  p.iota_a = p.on_a.iota();
  p.iota_b = p.on_b.iota();
  return p;
}

std::vector<std::size_t> linear_extension(const OrderTable& order) {
  std::vector<std::size_t> all(order.size());
  std::iota(all.begin(), all.end(), 0);
  return linear_extension(order, all);
}

std::vector<std::size_t> linear_extension(const OrderTable& order, std::span<const std::size_t> subset) {
  const std::size_t m = subset.size();
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (order.less(subset[j], subset[i])) ++indegree[i];
    }
  }
  // Min-heap on the original position keeps ties in index order.
  std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                      std::greater<>>
      ready;
  for (std::size_t i = 0; i < m; ++i) {
    if (indegree[i] == 0) ready.emplace(subset[i], i);
  }
  std::vector<std::size_t> out;
  out.reserve(m);
  while (!ready.empty()) {
    auto [pos, i] = ready.top();
    ready.pop();
    out.push_back(pos);
    for (std::size_t j = 0; j < m; ++j) {
      if (order.less(pos, subset[j]) && --indegree[j] == 0) ready.emplace(subset[j], j);
    }
  }
  if (out.size() != m) throw Error("order relation has a cycle");
  return out;
}

Chain interval_chains(const OrderTable& order, std::size_t n, std::size_t k) {
  const std::size_t size = order.size();
  const std::uint64_t iota = order.iota();
  if (n == 0 || k == 0 || size <= n * k) throw HypothesisViolated(size, n, k, iota);
  const std::uint64_t slack = size - n * k;
  // iota <= slack^2 / (16k), compared as integers.
  if (static_cast<__int128>(16) * k * iota > static_cast<__int128>(slack) * slack) {
    throw HypothesisViolated(size, n, k, iota);
  }

  // Q = {x : |I_x| < T}, T = slack / (4k).
  std::vector<std::size_t> q;
  for (std::size_t x = 0; x < size; ++x) {
    if (4 * k * order.incomparable_count(x) < slack) q.push_back(x);
  }
  std::vector<std::size_t> ext = linear_extension(order, q);
  const std::size_t buffer = slack / (2 * k);  // floor(2T)

  Chain chain;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t start = i * (n + buffer);
    if (start + n > ext.size()) throw Error("interval extraction ran out of elements");
    chain.blocks.emplace_back(ext.begin() + static_cast<std::ptrdiff_t>(start),
                              ext.begin() + static_cast<std::ptrdiff_t>(start + n));
  }
  if (!blocks_ordered(order, chain)) throw Error("interval extraction produced unordered blocks");
  return chain;
}

Chain greedy_interval_chains(const OrderTable& order, std::size_t n, std::size_t max_blocks) {
  Chain chain;
  if (n == 0 || max_blocks == 0) return chain;
  std::vector<std::size_t> closed;
  std::vector<std::size_t> current;
  for (std::size_t x : linear_extension(order)) {
    bool above = std::all_of(closed.begin(), closed.end(), [&](std::size_t y) { return order.less(y, x); });
    if (!above) continue;
    current.push_back(x);
    if (current.size() == n) {
      closed.insert(closed.end(), current.begin(), current.end());
      chain.blocks.push_back(std::move(current));
      current.clear();
      if (chain.blocks.size() == max_blocks) break;
    }
  }
  return chain;
}

bool blocks_ordered(const OrderTable& order, const Chain& chain) {
  std::vector<bool> seen(order.size(), false);
  for (const auto& block : chain.blocks) {
    for (std::size_t x : block) {
      if (x >= order.size() || seen[x]) return false;
      seen[x] = true;
    }
  }
  for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.blocks.size(); ++j) {
      for (std::size_t x : chain.blocks[i]) {
        for (std::size_t y : chain.blocks[j]) {
          if (!order.less(x, y)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> longest_chain(std::size_t count,
                                       const std::function<bool(std::size_t, std::size_t)>& precedes) {
  if (count == 0) return {};
  // In a strict order every predecessor of x has strictly fewer
  // predecessors than x, so sorting by predecessor count is topological.
  std::vector<std::vector<char>> rel(count, std::vector<char>(count, 0));
  std::vector<std::size_t> preds(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && precedes(i, j)) {
        rel[i][j] = 1;
        ++preds[j];
      }
    }
  }
  std::vector<std::size_t> topo(count);
  std::iota(topo.begin(), topo.end(), 0);
  std::stable_sort(topo.begin(), topo.end(), [&](std::size_t l, std::size_t r) { return preds[l] < preds[r]; });

  std::vector<std::size_t> best_from(count, 1);
  for (std::size_t t = count; t-- > 0;) {
    std::size_t i = topo[t];
    for (std::size_t j = 0; j < count; ++j) {
      if (rel[i][j]) best_from[i] = std::max(best_from[i], best_from[j] + 1);
    }
  }

  const std::size_t length = *std::max_element(best_from.begin(), best_from.end());
  std::vector<std::size_t> out;
  std::size_t cur = 0;
  while (best_from[cur] != length) ++cur;
  out.push_back(cur);
  while (best_from[cur] > 1) {
    std::size_t next = 0;
    while (!(rel[cur][next] && best_from[next] + 1 == best_from[cur])) ++next;
    out.push_back(next);
    cur = next;
  }
  return out;
}

}  // namespace crossfam
