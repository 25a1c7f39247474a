#include <gtest/gtest.h>

#include <algorithm>

#include "crossfam/errors.hpp"
#include "crossfam/poset.hpp"
#include "crossfam/random.hpp"
#include "support.hpp"

using namespace crossfam;

TEST(LessUnder, Examples) {
  std::vector<Point> b{{0, 3}, {2, 3}};
  EXPECT_EQ(less_under({0, 0}, {2, 0}, b), Cmp::Less);
  EXPECT_EQ(less_under({2, 0}, {0, 0}, b), Cmp::Greater);
  std::vector<Point> straddle{{1, 1}, {1, -1}};
  EXPECT_EQ(less_under({0, 0}, {2, 0}, straddle), Cmp::Incomparable);
  std::vector<Point> on{{5, 0}};
  EXPECT_THROW(less_under({0, 0}, {2, 0}, on), DegenerateInput);
}

TEST(PairPoset, FourPointExample) {
  PointSet v({{0, 0}, {2, 0}, {0, 3}, {2, 3}});
  std::vector<VertexId> a{0, 1}, b{3, 2};
  PairPoset p = build_pair_poset(a, b, v);
  EXPECT_EQ(p.on_a.at(0, 1), Cmp::Less);   // (0,0) < (2,0)
  EXPECT_EQ(p.on_b.at(0, 1), Cmp::Less);   // (2,3) < (0,3)
  EXPECT_EQ(p.iota_a, 0u);
  EXPECT_EQ(p.iota_b, 0u);
  EXPECT_TRUE(p.is_zero_avoiding());
}

TEST(PairPoset, SmallCircleFarBelow) {
  PointSet v({{0, 0}, {3, 1}, {1, 3}, {-100, 1000}, {100, 1001}});
  std::vector<VertexId> a{0, 1, 2}, b{3, 4};
  PairPoset p = build_pair_poset(a, b, v);
  EXPECT_EQ(p.iota_a, 0u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) {
        EXPECT_TRUE(p.on_a.comparable(i, j));
      }
    }
  }
}

TEST(PairPoset, IntersectingHullsRejected) {
  PointSet v({{0, 0}, {2, 0}, {1, 5}, {1, -5}});
  std::vector<VertexId> a{0, 1}, b{2, 3};
  EXPECT_THROW(build_pair_poset(a, b, v), NotSeparated);
}

TEST(PairPoset, SizeCap) {
  testsupport::SeparatedPair sp = testsupport::random_separated_pair(6, 6, 1);
  EXPECT_THROW(build_pair_poset(sp.a, sp.b, sp.v, 5), TooLarge);
}

TEST(PairPoset, MatchesDefinitionAndOrderProperties) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t na = 3 + seed % 10, nb = 2 + (seed * 7) % 12;
    testsupport::SeparatedPair sp = testsupport::random_separated_pair(na, nb, seed);
    PairPoset p = build_pair_poset(sp.a, sp.b, sp.v);
    std::vector<Point> bpts = sp.v.gather(sp.b);
    std::uint64_t iota = 0;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < na; ++j) {
        if (i == j) continue;
        ASSERT_EQ(p.on_a.at(i, j), testsupport::naive_less(sp.v[sp.a[i]], sp.v[sp.a[j]], bpts));
        ASSERT_EQ(!p.on_a.comparable(i, j), line_meets_hull(sp.v[sp.a[i]], sp.v[sp.a[j]], convex_hull(bpts)));
        if (i < j && !p.on_a.comparable(i, j)) ++iota;
        for (std::size_t k = 0; k < na; ++k) {
          if (p.on_a.less(i, j) && p.on_a.less(j, k)) {
            ASSERT_TRUE(p.on_a.less(i, k));
          }
        }
      }
    }
    ASSERT_EQ(p.iota_a, iota);
  }
}

TEST(OrderTable, IotaAndRestrict) {
  OrderTable t(4);
  t.set_less(0, 1);
  t.set_less(1, 2);
  t.set_less(0, 2);
  EXPECT_EQ(t.iota(), 3u);  // 3 is incomparable to everything
  EXPECT_EQ(t.incomparable_count(3), 3u);
  EXPECT_EQ(t.incomparable_count(0), 1u);
  std::vector<std::size_t> keep{2, 0};
  OrderTable r = t.restrict(keep);
  EXPECT_EQ(r.at(1, 0), Cmp::Less);
  EXPECT_EQ(r.iota(), 0u);
}

namespace {

OrderTable total_order(std::size_t n) {
  return OrderTable::from_relation(n, [](std::size_t i, std::size_t j) { return i < j; });
}

}  // namespace

TEST(IntervalChains, TotalOrderHandTrace) {
  Chain c = interval_chains(total_order(10), 2, 3);
  ASSERT_EQ(c.blocks.size(), 3u);
  EXPECT_EQ(c.blocks[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.blocks[1], (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c.blocks[2], (std::vector<std::size_t>{4, 5}));
}

TEST(IntervalChains, HypothesisViolations) {
  OrderTable antichain(4);
  try {
    interval_chains(antichain, 1, 1);
    FAIL() << "expected HypothesisViolated";
  } catch (const HypothesisViolated& e) {
    EXPECT_EQ(e.size(), 4u);
    EXPECT_EQ(e.iota(), 6u);
  }
  EXPECT_THROW(interval_chains(total_order(6), 2, 3), HypothesisViolated);  // |P| = nk
}

TEST(IntervalChains, BufferSkipsElements) {
  // |P| = 20, n = 2, k = 2: T = 16/8 = 2, buffer floor(2T) = 4.
  Chain c = interval_chains(total_order(20), 2, 2);
  ASSERT_EQ(c.blocks.size(), 2u);
  EXPECT_EQ(c.blocks[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.blocks[1], (std::vector<std::size_t>{6, 7}));
}

TEST(GreedyIntervalChains, AntichainGivesOneBlock) {
  OrderTable antichain(6);
  Chain c = greedy_interval_chains(antichain, 3, 4);
  ASSERT_EQ(c.blocks.size(), 1u);
  EXPECT_TRUE(blocks_ordered(antichain, c));
  Chain t = greedy_interval_chains(total_order(10), 3, 2);
  ASSERT_EQ(t.blocks.size(), 2u);
  EXPECT_TRUE(blocks_ordered(total_order(10), t));
}

TEST(LinearExtension, StableAndValid) {
  OrderTable t(4);
  t.set_less(3, 0);
  EXPECT_EQ(linear_extension(t), (std::vector<std::size_t>{1, 2, 3, 0}));
  std::vector<std::size_t> sub{0, 3};
  EXPECT_EQ(linear_extension(t, sub), (std::vector<std::size_t>{3, 0}));
}

TEST(LongestChain, Examples) {
  std::vector<std::pair<int, int>> items{{1, 1}, {2, 3}, {3, 2}, {4, 4}};
  auto dom = [&](std::size_t i, std::size_t j) {
    return items[i].first < items[j].first && items[i].second < items[j].second;
  };
  EXPECT_EQ(longest_chain(items.size(), dom), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_EQ(longest_chain(1, [](std::size_t, std::size_t) { return false; }), (std::vector<std::size_t>{0}));
  EXPECT_EQ(longest_chain(3, [](std::size_t, std::size_t) { return false; }), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(longest_chain(0, [](std::size_t, std::size_t) { return false; }).empty());
}

TEST(LongestChain, MatchesExhaustiveSearch) {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(9);
    std::vector<std::pair<std::int64_t, std::int64_t>> items;
    for (std::size_t i = 0; i < n; ++i) items.emplace_back(rng.between(0, 5), rng.between(0, 5));
    auto dom = [&](std::size_t i, std::size_t j) {
      return items[i].first < items[j].first && items[i].second < items[j].second;
    };
    // Best chain by enumerating subsets in lexicographic index order.
    std::vector<std::size_t> best;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<std::size_t> sel;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) sel.push_back(i);
      }
      std::vector<std::size_t> ordered = sel;
      std::sort(ordered.begin(), ordered.end(), [&](std::size_t l, std::size_t r) { return items[l] < items[r]; });
      bool chain = true;
      for (std::size_t i = 0; i + 1 < ordered.size(); ++i) chain = chain && dom(ordered[i], ordered[i + 1]);
      if (!chain) continue;
      if (ordered.size() > best.size() || (ordered.size() == best.size() && ordered < best)) best = ordered;
    }
    ASSERT_EQ(longest_chain(n, dom).size(), best.size());
  }
}
