#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/geom.hpp"
#include "crossfam/poset.hpp"
#include "crossfam/rational.hpp"
#include "crossfam/zones.hpp"

namespace crossfam {

enum class RunMode { Theory, Practical };

std::string to_string(RunMode mode);

struct RunConfig {
  RunMode run = RunMode::Practical;
  FamilyMode family = FamilyMode::Crossing;
  std::optional<std::size_t> m;  // default floor(n^(1/3)) clamped to [2, 64]
  std::size_t t = 3;
  std::size_t k = 2;
  Rational eps{1, 4};
  Rational delta{1, 4};
  std::uint64_t seed = 0;
  unsigned max_retries = 8;
  std::size_t m_decay = 2;  // m is divided by this on each retry
  double net_constant = kDefaultNetConstant;
  unsigned theory_s = 2;  // recursion depth for the theory schedule
};

/// Default starting cluster size for n points.
std::size_t default_cluster_size(std::size_t n);

/// Pairs A sorted by <_B with B sorted by <_A (reversed for avoiding).
/// Throws NotTotalOrder unless the pair is 0-avoiding and PreconditionViolated
/// unless |A| = |B|.
SegmentFamily match_avoiding_pair(const PairPoset& p, const PointSet& v, FamilyMode mode);
SegmentFamily match_avoiding_pair(std::span<const VertexId> a, std::span<const VertexId> b, const PointSet& v,
                                  FamilyMode mode = FamilyMode::Crossing);

/// Longest family of edges of E(A, B) ordered by x <_B x' and y <_A y'
/// (y' <_A y for avoiding).  Contains match_avoiding_pair whenever that
/// applies and all matched edges exist.
SegmentFamily monotone_edge_chain(const GeometricGraph& g, const PairPoset& p, FamilyMode mode);

struct SplitParams {
  std::size_t t = 3;
  std::size_t k = 2;
  std::size_t m = 0;
  Rational eps{1, 4};    // eligibility, relaxed mode only
  Rational delta{1, 4};
  bool strict = false;   // exact interval extraction, fixed delta = 1/t, eps = 1/(32 t^2 k)
  FamilyMode mode = FamilyMode::Crossing;
};

struct BlockPair {
  std::size_t a_block = 0;  // index into chain_a
  std::size_t b_block = 0;  // index into chain_b
  PairPoset poset;
};

struct SplitResult {
  Chain chain_a;  // blocks of positions into P.a, increasing under <_B
  Chain chain_b;  // blocks of positions into P.b, increasing under <_A
  std::vector<std::pair<std::size_t, std::size_t>> eligible;
  std::vector<BlockPair> pairs;
};

/// Cuts (A, B) into block chains and returns a chain of eligible block
/// pairs: every edge of one pair crosses (avoids) every edge of a later one.
/// Strict mode requires |A| = |B| = (t+1)km, t >= 3 and the density and
/// avoidance preconditions and returns exactly k pairs.  Throws
/// PreconditionViolated, HypothesisViolated, or Error on an empty
/// eligibility set.
SplitResult split_pair(const GeometricGraph& g, const PairPoset& p, const SplitParams& params);

struct LevelSplit {
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t m = 0;
};

struct RecursionPlan {
  RunMode run = RunMode::Practical;
  FamilyMode family = FamilyMode::Crossing;
  std::vector<LevelSplit> levels;  // strict splits, outermost first
  std::size_t depth = 1;           // relaxed recursion budget
  std::size_t t = 3;
  std::size_t k = 2;
  Rational eps{1, 4};
  Rational delta{1, 4};
};

/// Recursive split until the budget is spent, then a base family per
/// leaf.  The union is verified; relaxed mode also keeps the flat base
/// family of the pair when it is larger.
SegmentFamily crossing_family_from_pair(const GeometricGraph& g, const PairPoset& p, const RecursionPlan& plan);

/// Top-level drivers.  Always return a verified family of size >= 1;
/// throw EmptyGraph on a graph without edges.
SegmentFamily find_crossing_family(const GeometricGraph& g, RunConfig cfg = {});
SegmentFamily find_avoiding_family(const GeometricGraph& g, RunConfig cfg = {});
SegmentFamily find_family(const GeometricGraph& g, const RunConfig& cfg);

}  // namespace crossfam
