#include "crossfam/crossing.hpp"

#include <algorithm>
#include <cmath>

#include "crossfam/clusters.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/schedule.hpp"

namespace crossfam {
namespace {

constexpr std::size_t kChainItemCap = 8192;
constexpr std::size_t kWideClusterCap = 64;

bool pairwise_related(std::span<const Segment> segs, const PointSet& v, FamilyMode mode) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!related(segs[i], segs[j], v, mode)) return false;
    }
  }
  return true;
}

std::vector<VertexId> pick(std::span<const VertexId> ids, std::span<const std::size_t> positions) {
  std::vector<VertexId> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(ids[p]);
  return out;
}

std::uint64_t iota_against(std::span<const VertexId> side, std::span<const Point> hull, const PointSet& v) {
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < side.size(); ++x) {
    for (std::size_t y = x + 1; y < side.size(); ++y) {
      if (line_meets_hull(v[side[x]], v[side[y]], hull)) ++count;
    }
  }
  return count;
}

std::uint64_t square(std::size_t x) { return static_cast<std::uint64_t>(x) * x; }

std::size_t to_size(const BigInt& x) {
  if (x < 0 || x > BigInt(std::numeric_limits<std::uint32_t>::max())) throw Overflow("schedule value out of range");
  return x.convert_to<std::size_t>();
}

Rational to_rational(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
  const BigInt cap(std::numeric_limits<std::int64_t>::max());
  if (num > cap || den > cap || num < -cap) throw Overflow("schedule value out of range");
  return Rational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

SegmentFamily first_edge(const GeometricGraph& g, FamilyMode mode) {
  SegmentFamily f;
  f.mode = mode;
  const Edge& e = g.edges().front();
  f.segments.push_back({e.u, e.v});
  f.verified = true;
  return f;
}

SegmentFamily base_family(const GeometricGraph& g, const PairPoset& p, const RecursionPlan& plan) {
  if (plan.run == RunMode::Practical) return monotone_edge_chain(g, p, plan.family);
  SegmentFamily f;
  f.mode = plan.family;
  for (VertexId x : p.a) {
    for (VertexId y : p.b) {
      if (g.has_edge(x, y)) {
        f.segments.push_back({x, y});
        f.verified = true;
        return f;
      }
    }
  }
  f.verified = true;
  return f;
}

// Adds sub-families in block order, keeping a sub-family only when it is
// compatible with everything accepted so far.
SegmentFamily merge_blocks(const std::vector<SegmentFamily>& parts, const PointSet& v, FamilyMode mode) {
  SegmentFamily out;
  out.mode = mode;
  for (const SegmentFamily& part : parts) {
    bool ok = true;
    for (const Segment& s : part.segments) {
      for (const Segment& t : out.segments) {
        if (!related(s, t, v, mode)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.segments.insert(out.segments.end(), part.segments.begin(), part.segments.end());
  }
  out.verified = true;
  return out;
}

SegmentFamily recurse(const GeometricGraph& g, const PairPoset& p, const RecursionPlan& plan, std::size_t level) {
  const PointSet& v = g.vertices();
  if (plan.run == RunMode::Theory) {
    if (level >= plan.levels.size()) return base_family(g, p, plan);
    const LevelSplit& ls = plan.levels[level];
    SplitParams sp;
    sp.t = ls.t;
    sp.k = ls.k;
    sp.m = ls.m;
    sp.strict = true;
    sp.mode = plan.family;
    SplitResult split = split_pair(g, p, sp);
    SegmentFamily out;
    out.mode = plan.family;
    for (const BlockPair& bp : split.pairs) {
      SegmentFamily sub = recurse(g, bp.poset, plan, level + 1);
      out.segments.insert(out.segments.end(), sub.segments.begin(), sub.segments.end());
    }
    if (!pairwise_related(out.segments, v, plan.family)) throw Error("block union failed verification");
    out.verified = true;
    return out;
  }

  SegmentFamily flat = base_family(g, p, plan);
  if (level + 1 >= plan.depth) return flat;
  const std::size_t m = p.a.size() / ((plan.t + 1) * plan.k);
  if (m < 2) return flat;

  SplitParams sp;
  sp.t = plan.t;
  sp.k = plan.k;
  sp.m = m;
  sp.eps = plan.eps;
  sp.delta = plan.delta;
  sp.mode = plan.family;
  std::vector<SegmentFamily> parts;
  try {
    SplitResult split = split_pair(g, p, sp);
    for (const BlockPair& bp : split.pairs) {
      try {
        parts.push_back(recurse(g, bp.poset, plan, level + 1));
      } catch (const Error&) {
      }
    }
  } catch (const Error&) {
    return flat;
  }
  SegmentFamily merged = merge_blocks(parts, v, plan.family);
  return merged.size() > flat.size() ? merged : flat;
}

SegmentFamily practical_search(const GeometricGraph& g, const RunConfig& cfg) {
  const std::size_t n = g.vertex_count();
  SegmentFamily best = first_edge(g, cfg.family);
  const std::size_t growth = (cfg.t + 1) * cfg.k;
  const std::size_t m1 = cfg.m.value_or(default_cluster_size(n));
  ZonePolicy policy;
  policy.mode = ZonePolicy::Mode::Capped;
  policy.net_constant = cfg.net_constant;

  // One level of the search: find a pair of clusters of size m (shrinking
  // m and growing eps on failure) and run the depth-s recursion on it.
  auto attempt = [&](std::size_t m, std::size_t s, std::uint64_t salt) {
    Rational eps = cfg.eps;
    for (unsigned retry = 0; retry <= cfg.max_retries && m >= 1; ++retry) {
      std::optional<DensePair> pair = find_avoiding_dense_pair(g, m, eps, cfg.delta, cfg.seed + salt + retry, policy);
      if (pair) {
        RecursionPlan plan;
        plan.run = RunMode::Practical;
        plan.family = cfg.family;
        plan.depth = s;
        plan.t = cfg.t;
        plan.k = cfg.k;
        plan.eps = cfg.eps;
        plan.delta = cfg.delta;
        SegmentFamily f = crossing_family_from_pair(g, pair->poset, plan);
        if (f.verified && f.size() > best.size()) best = std::move(f);
        return;
      }
      m /= std::max<std::size_t>(cfg.m_decay, 2);
      eps = std::min(Rational(1), eps * Rational(2));
    }
  };

  std::size_t m_s = m1;
  for (std::size_t s = 1; 2 * m_s <= n; ++s) {
    attempt(m_s, s, 64 * (s - 1));
    if (m_s > n / growth) break;
    m_s *= growth;
  }
  // Flat attempts on wider clusters: the base family grows with the pair.
  const std::size_t wide = std::min<std::size_t>(n / 2, kWideClusterCap);
  for (std::size_t m = 2 * m1, i = 0; m <= wide; m *= 2, ++i) attempt(m, 1, 4096 + 64 * i);
  if (wide > m1 && (wide & (wide - 1)) != 0) attempt(wide, 1, 8192);
  return best;
}

SegmentFamily theory_search(const GeometricGraph& g, const RunConfig& cfg) {
  const std::size_t n = g.vertex_count();
  SegmentFamily best = first_edge(g, cfg.family);
  ParamSchedule sch = g.is_complete() ? theory_params_complete(cfg.theory_s)
                                      : theory_params_dense(n, density_exponent(n, g.edge_count()), cfg.theory_s);
  if (sch.M > BigInt(n / 2)) return best;

  std::size_t m;
  Rational eps, delta;
  RecursionPlan plan;
  plan.run = RunMode::Theory;
  plan.family = cfg.family;
  try {
    m = to_size(sch.M);
    eps = to_rational(sch.eps);
    delta = to_rational(sch.delta);
    for (const LevelParams& lv : sch.levels) {
      if (lv.level < 2) continue;
      plan.levels.push_back({to_size(lv.t), to_size(lv.k), to_size(lv.m)});
    }
  } catch (const Overflow&) {
    return best;
  }

  ZonePolicy policy;
  policy.mode = ZonePolicy::Mode::Verified;
  policy.net_constant = cfg.net_constant;
  policy.audit = n <= 2000 ? CandidateLines::all_determined() : CandidateLines::sampled(2000, cfg.seed);
  std::optional<DensePair> pair = find_avoiding_dense_pair(g, m, eps, delta, cfg.seed, policy);
  if (!pair) return best;
  try {
    SegmentFamily f = crossing_family_from_pair(g, pair->poset, plan);
    if (f.verified && f.size() > best.size()) best = std::move(f);
  } catch (const VerificationExhausted&) {
    throw;
  } catch (const Error&) {
  }
  return best;
}

}  // namespace

std::string to_string(RunMode mode) { return mode == RunMode::Theory ? "theory" : "practical"; }

std::size_t default_cluster_size(std::size_t n) {
  std::size_t c = 0;
  while ((c + 1) * (c + 1) * (c + 1) <= n) ++c;
  return std::clamp<std::size_t>(c, 2, 64);
}

SegmentFamily match_avoiding_pair(const PairPoset& p, const PointSet& v, FamilyMode mode) {
  if (p.a.size() != p.b.size()) throw PreconditionViolated("matching needs |A| = |B|");
  if (!p.is_zero_avoiding()) throw NotTotalOrder("pair is not 0-avoiding");
  std::vector<std::size_t> xs = linear_extension(p.on_a);
  std::vector<std::size_t> ys = linear_extension(p.on_b);
  if (mode == FamilyMode::Avoiding) std::reverse(ys.begin(), ys.end());
  SegmentFamily f;
  f.mode = mode;
  for (std::size_t i = 0; i < xs.size(); ++i) f.segments.push_back({p.a[xs[i]], p.b[ys[i]]});
  f.verified = pairwise_related(f.segments, v, mode);
  if (!f.verified) throw Error("matched family failed verification");
  return f;
}

SegmentFamily match_avoiding_pair(std::span<const VertexId> a, std::span<const VertexId> b, const PointSet& v,
                                  FamilyMode mode) {
  return match_avoiding_pair(build_pair_poset(a, b, v), v, mode);
}

SegmentFamily monotone_edge_chain(const GeometricGraph& g, const PairPoset& p, FamilyMode mode) {
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t x = 0; x < p.a.size(); ++x) {
    for (std::size_t y = 0; y < p.b.size(); ++y) {
      if (g.has_edge(p.a[x], p.b[y])) items.emplace_back(x, y);
    }
  }
  SegmentFamily f;
  f.mode = mode;
  f.verified = true;
  if (items.empty()) return f;
  if (items.size() > kChainItemCap) {
    f.segments.push_back({p.a[items[0].first], p.b[items[0].second]});
    return f;
  }
  auto precedes = [&](std::size_t i, std::size_t j) {
    const auto [x, y] = items[i];
    const auto [x2, y2] = items[j];
    if (!p.on_a.less(x, x2)) return false;
    return mode == FamilyMode::Crossing ? p.on_b.less(y, y2) : p.on_b.less(y2, y);
  };
  for (std::size_t i : longest_chain(items.size(), precedes)) {
    f.segments.push_back({p.a[items[i].first], p.b[items[i].second]});
  }
  f.verified = pairwise_related(f.segments, g.vertices(), mode);
  if (!f.verified) throw Error("monotone chain failed verification");
  return f;
}

SplitResult split_pair(const GeometricGraph& g, const PairPoset& p, const SplitParams& params) {
  const PointSet& v = g.vertices();
  const std::size_t size = p.a.size();
  if (params.t == 0 || params.k == 0 || params.m == 0) throw PreconditionViolated("t, k, m must be positive");
  Rational eps = params.eps, delta = params.delta;
  SplitResult r;
  if (params.strict) {
    if (params.t < 3) throw PreconditionViolated("splitting needs t >= 3");
    if (p.b.size() != size || size != (params.t + 1) * params.k * params.m) {
      throw PreconditionViolated("splitting needs |A| = |B| = (t+1)km");
    }
    const auto t = static_cast<std::int64_t>(params.t);
    const auto k = static_cast<std::int64_t>(params.k);
    delta = Rational(1, t);
    eps = Rational(1, 32 * t * t * k);
    if (!at_least(g.edges_between(p.a, p.b), Rational(8) * delta, square(size))) {
      throw PreconditionViolated("pair is not 8/t-dense");
    }
    if (!at_most(p.iota_sum(), eps * delta, square(size))) throw PreconditionViolated("pair is not eps/t-avoiding");
    r.chain_a = interval_chains(p.on_a, params.m, params.t * params.k);
    r.chain_b = interval_chains(p.on_b, params.m, params.t * params.k);
  } else {
    const std::size_t blocks = (params.t + 1) * params.k;
    r.chain_a = greedy_interval_chains(p.on_a, params.m, blocks);
    r.chain_b = greedy_interval_chains(p.on_b, params.m, blocks);
  }

  std::vector<std::vector<VertexId>> cs, ds;
  std::vector<std::vector<Point>> c_hulls, d_hulls;
  for (const auto& blk : r.chain_a.blocks) {
    cs.push_back(pick(p.a, blk));
    c_hulls.push_back(convex_hull(v.gather(cs.back())));
  }
  for (const auto& blk : r.chain_b.blocks) {
    ds.push_back(pick(p.b, blk));
    d_hulls.push_back(convex_hull(v.gather(ds.back())));
  }
  const std::uint64_t area = square(params.m);
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = 0; b < ds.size(); ++b) {
      if (!at_least(g.edges_between(cs[a], ds[b]), delta, area)) continue;
      const std::uint64_t iota = iota_against(cs[a], d_hulls[b], v) + iota_against(ds[b], c_hulls[a], v);
      if (at_most(iota, eps, area)) r.eligible.emplace_back(a, b);
    }
  }
  if (r.eligible.empty()) throw Error("no eligible block pair");

  auto precedes = [&](std::size_t i, std::size_t j) {
    const auto [a, b] = r.eligible[i];
    const auto [a2, b2] = r.eligible[j];
    return a < a2 && (params.mode == FamilyMode::Crossing ? b < b2 : b > b2);
  };
  std::vector<std::size_t> chain = longest_chain(r.eligible.size(), precedes);
  if (params.strict) {
    if (chain.size() < params.k) throw Error("fewer than k eligible block pairs in a chain");
    chain.resize(params.k);
  }
  for (std::size_t i : chain) {
    const auto [a, b] = r.eligible[i];
    r.pairs.push_back({a, b, build_pair_poset(cs[a], ds[b], v)});
  }
  return r;
}

SegmentFamily crossing_family_from_pair(const GeometricGraph& g, const PairPoset& p, const RecursionPlan& plan) {
  SegmentFamily f = recurse(g, p, plan, 0);
  f.mode = plan.family;
  f.verified = pairwise_related(f.segments, g.vertices(), plan.family);
  if (!f.verified) throw Error("family failed verification");
  return f;
}

SegmentFamily find_family(const GeometricGraph& g, const RunConfig& cfg) {
  if (g.edge_count() == 0) throw EmptyGraph();
  if (cfg.t == 0 || cfg.k == 0 || (cfg.m && *cfg.m == 0) || cfg.eps <= Rational(0) || cfg.delta <= Rational(0)) {
    throw PreconditionViolated("run parameters must be positive");
  }
  SegmentFamily f = cfg.run == RunMode::Theory ? theory_search(g, cfg) : practical_search(g, cfg);
  if (!certify(f, g)) throw Error("returned family failed verification");
  return f;
}

SegmentFamily find_crossing_family(const GeometricGraph& g, RunConfig cfg) {
  cfg.family = FamilyMode::Crossing;
  return find_family(g, cfg);
}

SegmentFamily find_avoiding_family(const GeometricGraph& g, RunConfig cfg) {
  cfg.family = FamilyMode::Avoiding;
  return find_family(g, cfg);
}

}  // namespace crossfam
