#include <gtest/gtest.h>

#include <algorithm>

#include "crossfam/crossing.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/generate.hpp"
#include "crossfam/oracle.hpp"
#include "support.hpp"

using namespace crossfam;

namespace {

void expect_family_valid(const SegmentFamily& f, const GeometricGraph& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Segment& s = f.segments[i];
    ASSERT_TRUE(g.has_edge(s.a, s.b));
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const Segment& t = f.segments[j];
      ASSERT_FALSE(s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b);
      ASSERT_TRUE(testsupport::naive_related(s, t, g.vertices(), f.mode)) << i << " " << j;
    }
  }
}

std::vector<Edge> pair_edges(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<Edge> out;
  for (VertexId x : a) {
    for (VertexId y : b) out.push_back({std::min(x, y), std::max(x, y)});
  }
  return out;
}

// Every edge of one block pair against every edge of a later one.
void expect_cross_block(const SplitResult& r, const PointSet& v, FamilyMode mode) {
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < r.pairs.size(); ++j) {
      for (VertexId x : r.pairs[i].poset.a) {
        for (VertexId y : r.pairs[i].poset.b) {
          for (VertexId x2 : r.pairs[j].poset.a) {
            for (VertexId y2 : r.pairs[j].poset.b) {
              ASSERT_TRUE(testsupport::naive_related({x, y}, {x2, y2}, v, mode)) << "pairs " << i << " " << j;
            }
          }
        }
      }
    }
  }
}

// Blocks of a chain are ordered element by element under the definition.
void expect_chain_ordered(const Chain& c, const std::vector<VertexId>& side, const std::vector<Point>& other,
                          const PointSet& v) {
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < c.blocks.size(); ++j) {
      for (std::size_t x : c.blocks[i]) {
        for (std::size_t y : c.blocks[j]) {
          ASSERT_EQ(testsupport::naive_less(v[side[x]], v[side[y]], other), Cmp::Less);
        }
      }
    }
  }
}

}  // namespace

TEST(MatchAvoidingPair, FourPointExample) {
  PointSet v({{0, 0}, {2, 0}, {0, 3}, {2, 3}});
  std::vector<VertexId> a{0, 1}, b{2, 3};
  SegmentFamily c = match_avoiding_pair(a, b, v, FamilyMode::Crossing);
  EXPECT_EQ(c.segments, (std::vector<Segment>{{0, 3}, {1, 2}}));
  EXPECT_TRUE(c.verified);
  SegmentFamily d = match_avoiding_pair(a, b, v, FamilyMode::Avoiding);
  EXPECT_EQ(d.segments, (std::vector<Segment>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(testsupport::naive_avoiding(v[0], v[2], v[1], v[3]));
}

TEST(MatchAvoidingPair, Preconditions) {
  PointSet v({{0, 0}, {2, 0}, {0, 3}, {2, 3}, {1, 4}});
  std::vector<VertexId> a{0, 1}, b{2, 3, 4};
  EXPECT_THROW(match_avoiding_pair(a, b, v), PreconditionViolated);
  // (1,1) and (1,-1) straddle the line through A.
  PointSet w({{0, 0}, {5, 0}, {10, 1}, {10, -1}});
  std::vector<VertexId> a2{0, 1}, b2{2, 3};
  EXPECT_THROW(match_avoiding_pair(a2, b2, w), NotTotalOrder);
}

TEST(MatchAvoidingPair, ParabolaPairGivesFullFamily) {
  for (std::size_t m : {3u, 6u, 20u}) {
    testsupport::SeparatedPair sp = testsupport::parabola_pair(m, 3);
    GeometricGraph g = GeometricGraph::complete(sp.v);
    for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
      SegmentFamily f = match_avoiding_pair(sp.a, sp.b, sp.v, mode);
      EXPECT_EQ(f.size(), m);
      expect_family_valid(f, g);
    }
  }
}

TEST(MonotoneEdgeChain, FullOnZeroAvoidingPair) {
  testsupport::SeparatedPair sp = testsupport::parabola_pair(10, 2);
  GeometricGraph g = GeometricGraph::complete(sp.v);
  PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
  for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
    SegmentFamily f = monotone_edge_chain(g, p, mode);
    EXPECT_EQ(f.size(), 10u);
    expect_family_valid(f, g);
  }
}

TEST(MonotoneEdgeChain, ValidOnRandomPairsAndSparseGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    testsupport::SeparatedPair sp = testsupport::random_separated_pair(8, 9, seed);
    std::vector<Edge> edges;
    for (const Edge& e : pair_edges(sp.a, sp.b)) {
      if ((e.u * 13 + e.v * 7 + seed) % 4 != 0) edges.push_back(e);
    }
    GeometricGraph g(sp.v, edges);
    PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
    for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
      SegmentFamily f = monotone_edge_chain(g, p, mode);
      EXPECT_GE(f.size(), 1u);
      expect_family_valid(f, g);
    }
  }
  PointSet v({{0, 0}, {2, 0}, {0, 3}, {2, 3}});
  std::vector<VertexId> a{0, 1}, b{2, 3};
  EXPECT_EQ(monotone_edge_chain(GeometricGraph(v, {}), build_pair_poset(a, b, v), FamilyMode::Crossing).size(), 0u);
}

TEST(SplitPair, RelaxedCrossBlockGuarantee) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    testsupport::SeparatedPair sp = testsupport::far_pair(24, 24, seed);
    GeometricGraph g(sp.v, pair_edges(sp.a, sp.b));
    PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
    for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
      SplitParams params;
      params.t = 2;
      params.k = 2;
      params.m = 4;
      params.eps = Rational(1);
      params.delta = Rational(1, 4);
      params.mode = mode;
      SplitResult r = split_pair(g, p, params);
      ASSERT_FALSE(r.pairs.empty());
      for (const auto& blk : r.chain_a.blocks) EXPECT_EQ(blk.size(), 4u);
      expect_chain_ordered(r.chain_a, p.a, sp.v.gather(p.b), sp.v);
      expect_chain_ordered(r.chain_b, p.b, sp.v.gather(p.a), sp.v);
      expect_cross_block(r, sp.v, mode);
      for (std::size_t i = 0; i + 1 < r.pairs.size(); ++i) {
        EXPECT_LT(r.pairs[i].a_block, r.pairs[i + 1].a_block);
        if (mode == FamilyMode::Crossing) EXPECT_LT(r.pairs[i].b_block, r.pairs[i + 1].b_block);
        else EXPECT_GT(r.pairs[i].b_block, r.pairs[i + 1].b_block);
      }
    }
  }
}

TEST(SplitPair, StrictReturnsExactlyK) {
  testsupport::SeparatedPair sp = testsupport::parabola_pair(162);
  GeometricGraph g(sp.v, pair_edges(sp.a, sp.b));
  PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
  SplitParams params;
  params.t = 8;
  params.k = 2;
  params.m = 9;
  params.strict = true;
  SplitResult r = split_pair(g, p, params);
  EXPECT_EQ(r.chain_a.blocks.size(), 16u);
  ASSERT_EQ(r.pairs.size(), 2u);
  for (const BlockPair& bp : r.pairs) {
    EXPECT_EQ(bp.poset.a.size(), 9u);
    EXPECT_EQ(bp.poset.b.size(), 9u);
  }
  expect_chain_ordered(r.chain_a, p.a, sp.v.gather(p.b), sp.v);
  expect_chain_ordered(r.chain_b, p.b, sp.v.gather(p.a), sp.v);
  expect_cross_block(r, sp.v, FamilyMode::Crossing);

  params.mode = FamilyMode::Avoiding;
  SplitResult ra = split_pair(g, p, params);
  ASSERT_EQ(ra.pairs.size(), 2u);
  expect_cross_block(ra, sp.v, FamilyMode::Avoiding);
}

TEST(SplitPair, StrictWithSingleBlockPair) {
  testsupport::SeparatedPair sp = testsupport::parabola_pair(18);
  GeometricGraph g = GeometricGraph::complete(sp.v);
  PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
  SplitParams params;
  params.t = 8;
  params.k = 1;
  params.m = 2;
  params.strict = true;
  SplitResult r = split_pair(g, p, params);
  EXPECT_EQ(r.chain_a.blocks.size(), 8u);
  EXPECT_EQ(r.pairs.size(), 1u);
}

TEST(SplitPair, StrictPreconditions) {
  testsupport::SeparatedPair sp = testsupport::parabola_pair(18);
  PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
  SplitParams params;
  params.t = 2;
  params.k = 1;
  params.m = 2;
  params.strict = true;
  GeometricGraph full = GeometricGraph::complete(sp.v);
  EXPECT_THROW(split_pair(full, p, params), PreconditionViolated);  // t < 3
  params.t = 8;
  params.m = 3;
  EXPECT_THROW(split_pair(full, p, params), PreconditionViolated);  // size != (t+1)km
  params.m = 2;
  EXPECT_THROW(split_pair(GeometricGraph(sp.v, {{0, 18}}), p, params), PreconditionViolated);  // sparse
  params.m = 0;
  EXPECT_THROW(split_pair(full, p, params), PreconditionViolated);
  params.t = 4;
  params.m = 2;
  params.k = 2;
  EXPECT_THROW(split_pair(full, p, params), PreconditionViolated);  // 8/t > 1

  // A tangled pair fails the avoidance precondition.
  testsupport::SeparatedPair tangled = testsupport::random_separated_pair(18, 18, 3);
  PairPoset tp = build_pair_poset(tangled.a, tangled.b, tangled.v);
  ASSERT_GT(tp.iota_sum(), 0u);
  params.t = 8;
  params.k = 1;
  EXPECT_THROW(split_pair(GeometricGraph::complete(tangled.v), tp, params), PreconditionViolated);
}

TEST(SplitPair, NoEligiblePairThrows) {
  testsupport::SeparatedPair sp = testsupport::parabola_pair(16);
  GeometricGraph g(sp.v, {{0, 16}});
  PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
  SplitParams params;
  params.m = 2;
  params.delta = Rational(1, 2);
  EXPECT_THROW(split_pair(g, p, params), Error);
}

TEST(CrossingFamilyFromPair, TheoryScheduleOnEngineeredPair) {
  testsupport::SeparatedPair sp = testsupport::parabola_pair(648);
  GeometricGraph g(sp.v, pair_edges(sp.a, sp.b));
  PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
  RecursionPlan plan;
  plan.run = RunMode::Theory;
  plan.levels = {{8, 8, 9}};
  for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
    plan.family = mode;
    SegmentFamily f = crossing_family_from_pair(g, p, plan);
    EXPECT_EQ(f.size(), 8u);
    EXPECT_TRUE(f.verified);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        ASSERT_TRUE(testsupport::naive_related(f.segments[i], f.segments[j], sp.v, mode));
      }
    }
  }
}

TEST(CrossingFamilyFromPair, RelaxedRecursionIsValid) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    testsupport::SeparatedPair sp = testsupport::far_pair(32, 32, 40 + seed);
    GeometricGraph g = GeometricGraph::complete(sp.v);
    PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
    RecursionPlan plan;
    plan.depth = 3;
    plan.t = 1;
    plan.k = 2;
    plan.eps = Rational(1, 2);
    for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
      plan.family = mode;
      SegmentFamily f = crossing_family_from_pair(g, p, plan);
      EXPECT_GE(f.size(), monotone_edge_chain(g, p, mode).size());
      expect_family_valid(f, g);
    }
  }
}

TEST(Drivers, TwoPoints) {
  PointSet v({{0, 0}, {1, 5}});
  GeometricGraph g = GeometricGraph::complete(v);
  EXPECT_EQ(find_crossing_family(g).size(), 1u);
  EXPECT_EQ(find_avoiding_family(g).size(), 1u);
  RunConfig theory;
  theory.run = RunMode::Theory;
  EXPECT_EQ(find_crossing_family(g, theory).size(), 1u);
}

TEST(Drivers, Errors) {
  PointSet v = testsupport::random_points(6, 1);
  EXPECT_THROW(find_crossing_family(GeometricGraph(v, {})), EmptyGraph);
  RunConfig bad;
  bad.t = 0;
  EXPECT_THROW(find_crossing_family(GeometricGraph::complete(v), bad), PreconditionViolated);
  bad = {};
  bad.eps = Rational(0);
  EXPECT_THROW(find_avoiding_family(GeometricGraph::complete(v), bad), PreconditionViolated);
}

TEST(Drivers, ConvexTwelveBoundedByOracle) {
  GeometricGraph g = GeometricGraph::complete(generate_points(PointKind::Convex, 12, 1));
  for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
    RunConfig cfg;
    cfg.family = mode;
    SegmentFamily f = find_family(g, cfg);
    EXPECT_TRUE(f.verified);
    EXPECT_LE(f.size(), 6u);
    EXPECT_LE(f.size(), max_family_bruteforce(g, mode, 100).size());
    expect_family_valid(f, g);
  }
}

TEST(Drivers, RandomInstancesAreValidAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointSet v = testsupport::random_points(60 + 10 * seed, seed);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < v.size(); ++i) {
      for (VertexId j = i + 1; j < v.size(); ++j) {
        if (seed % 2 == 0 || (i + 3 * j) % 5 != 0) edges.push_back({i, j});
      }
    }
    GeometricGraph g(v, edges);
    for (FamilyMode mode : {FamilyMode::Crossing, FamilyMode::Avoiding}) {
      RunConfig cfg;
      cfg.family = mode;
      cfg.seed = seed;
      SegmentFamily f = find_family(g, cfg);
      expect_family_valid(f, g);
      EXPECT_EQ(find_family(g, cfg).segments, f.segments);
    }
  }
}

TEST(Drivers, TheoryModeFallsBackOnSmallInputs) {
  GeometricGraph g = GeometricGraph::complete(testsupport::random_points(200, 5));
  RunConfig cfg;
  cfg.run = RunMode::Theory;
  SegmentFamily f = find_crossing_family(g, cfg);
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE(f.verified);
}

TEST(DefaultClusterSize, Examples) {
  EXPECT_EQ(default_cluster_size(1), 2u);
  EXPECT_EQ(default_cluster_size(26), 2u);
  EXPECT_EQ(default_cluster_size(27), 3u);
  EXPECT_EQ(default_cluster_size(1000), 10u);
  EXPECT_EQ(default_cluster_size(1u << 30), 64u);
}
