#include "crossfam/oracle.hpp"

#include <bit>

#include "crossfam/errors.hpp"

namespace crossfam {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  for (std::uint64_t w : b) {
    if (w) return true;
  }
  return false;
}

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (std::uint64_t w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const RelationGraph& r) : r_(r) {}

  // Largest clique inside p, stopping early once a clique of size target
  // (if nonzero) is found.
  std::size_t run(const Bits& p, std::size_t target) {
    best_ = 0;
    target_ = target;
    expand(0, p);
    return best_;
  }

 private:
  // Greedy colouring: order[i] gets colour bound[i], bounds nondecreasing.
  void colour(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bits rest = p;
    std::size_t c = 0;
    while (any(rest)) {
      ++c;
      Bits q = rest;
      while (any(q)) {
        std::size_t w = 0;
        while (q[w] == 0) ++w;
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
        q[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        rest[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        const std::uint64_t* row = r_.row(v);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] &= ~row[i];
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  bool expand(std::size_t size, Bits p) {
    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_) return false;
      const std::size_t v = order[i];
      Bits np(p.size());
      const std::uint64_t* row = r_.row(v);
      for (std::size_t w = 0; w < p.size(); ++w) np[w] = p[w] & row[w];
      if (!any(np)) {
        if (size + 1 > best_) best_ = size + 1;
      } else if (expand(size + 1, np)) {
        return true;
      }
      if (target_ && best_ >= target_) return true;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    return false;
  }

  const RelationGraph& r_;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
};

}  // namespace

RelationGraph::RelationGraph(const GeometricGraph& g, FamilyMode mode)
    : nodes_(g.edges().begin(), g.edges().end()), words_((nodes_.size() + 63) / 64),
      bits_(nodes_.size() * words_, 0) {
  const PointSet& v = g.vertices();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      const Segment s{nodes_[i].u, nodes_[i].v}, t{nodes_[j].u, nodes_[j].v};
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
      if (!related(s, t, v, mode)) continue;
      bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

std::vector<std::size_t> maximum_clique(const RelationGraph& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> out;
  if (n == 0) return out;
  Bits all(r.words(), 0);
  for (std::size_t i = 0; i < n; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
  CliqueSearch search(r);
  const std::size_t omega = search.run(all, 0);

  // Smallest index first: take v whenever the remaining candidates above v
  // still hold a clique completing a maximum one.
  Bits cand = all;
  for (std::size_t v = 0; v < n && out.size() < omega; ++v) {
    if (!((cand[v / 64] >> (v % 64)) & 1U)) continue;
    Bits next(r.words(), 0);
    const std::uint64_t* row = r.row(v);
    for (std::size_t w = 0; w < next.size(); ++w) next[w] = cand[w] & row[w];
    for (std::size_t u = 0; u <= v; ++u) next[u / 64] &= ~(std::uint64_t{1} << (u % 64));
    const std::size_t need = omega - out.size() - 1;
    if (need == 0 || (count(next) >= need && search.run(next, need) >= need)) {
      out.push_back(v);
      cand = next;
    }
  }
  return out;
}

SegmentFamily max_family_bruteforce(const GeometricGraph& g, FamilyMode mode, std::size_t limit) {
  if (g.edge_count() == 0) throw EmptyGraph();
  if (g.edge_count() > limit) {
    throw TooLarge("oracle limited to " + std::to_string(limit) + " edges, graph has " +
                   std::to_string(g.edge_count()));
  }
  RelationGraph r(g, mode);
  SegmentFamily f;
  f.mode = mode;
  for (std::size_t i : maximum_clique(r)) f.segments.push_back({r.nodes()[i].u, r.nodes()[i].v});
  if (!certify(f, g)) throw Error("oracle family failed verification");
  return f;
}

}  // namespace crossfam
