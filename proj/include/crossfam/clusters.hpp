#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossfam/geom.hpp"
#include "crossfam/poset.hpp"
#include "crossfam/rational.hpp"
#include "crossfam/zones.hpp"

namespace crossfam {

/// Where a cluster lives: an open cell of the arrangement (its sign vector)
/// cut by parallel splitters fx*x + fy*y = value.  Splitter values are
/// stored doubled so they stay integral; an absent bound is unbounded.
struct ClusterCell {
  std::vector<std::int8_t> signs;
  std::int64_t fx = 1;
  std::int64_t fy = 0;
  std::optional<__int128> lower2;
  std::optional<__int128> upper2;
};

struct ClusterDecomposition {
  ZoneLineSet lines;
  std::size_t m = 0;
  std::vector<std::vector<VertexId>> clusters;  // each exactly m points
  std::vector<ClusterCell> cells;               // parallel to clusters
  std::vector<VertexId> leftover;               // H, including on_lines
  std::vector<VertexId> on_lines;               // points on some line of L
};

/// Groups points by open cell, sorts each cell by (x, y) and cuts it into
/// consecutive runs of m; the partial run of each cell and every point on
/// a line of L go to the leftover set.
ClusterDecomposition build_clusters(const PointSet& v, ZoneLineSet lines, std::size_t m);

struct PairStats {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t iota_sum = 0;
};

bool is_dense(const PairStats& s, const Rational& delta, std::size_t m);
bool is_avoiding(const PairStats& s, const Rational& eps, std::size_t m);

/// Statistics for every unordered cluster pair, in (i, j) order.
std::vector<PairStats> pair_statistics(const GeometricGraph& g, const ClusterDecomposition& d);

/// Densest pair that is both delta-dense and eps-avoiding; ties go to the
/// smallest (i, j).
std::optional<std::pair<std::size_t, std::size_t>> select_pair(const std::vector<PairStats>& stats,
                                                              const Rational& eps, const Rational& delta,
                                                              std::size_t m);

/// Edge classification from the density argument: touching the leftover
/// set, inside one cluster, between a sparse cluster pair, between a dense
/// cluster pair.
struct EdgeCategories {
  std::uint64_t leftover = 0;
  std::uint64_t intra_cluster = 0;
  std::uint64_t sparse_pair = 0;
  std::uint64_t dense_pair = 0;

  std::uint64_t total() const { return leftover + intra_cluster + sparse_pair + dense_pair; }
};

EdgeCategories classify_edges(const GeometricGraph& g, const ClusterDecomposition& d,
                              const std::vector<PairStats>& stats, const Rational& delta);

/// How the arrangement for the decomposition is obtained.
struct ZonePolicy {
  enum class Mode {
    Verified,  // full net size, audited, VerificationExhausted on failure
    Capped,    // net capped so that the cells can still hold clusters; no audit
  };
  Mode mode = Mode::Capped;
  double net_constant = kDefaultNetConstant;
  CandidateLines audit = CandidateLines::all_determined();
};

/// Largest net size q with C(q,2)^2 * 4m <= n (0 when fewer than two).
std::size_t capped_net_size(std::size_t n, std::size_t m);

struct DensePair {
  std::size_t cluster_a = 0;
  std::size_t cluster_b = 0;
  PairStats stats;
  PairPoset poset;
};

/// Zone lines with parameter eps*delta/2, clusters of size m, statistics,
/// selection.  nullopt when no cluster pair qualifies.
std::optional<DensePair> find_avoiding_dense_pair(const GeometricGraph& g, std::size_t m, const Rational& eps,
                                                  const Rational& delta, std::uint64_t seed,
                                                  const ZonePolicy& policy = {});

}  // namespace crossfam
