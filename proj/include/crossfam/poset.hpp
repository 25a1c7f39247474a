#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "crossfam/geom.hpp"

namespace crossfam {

enum class Cmp : std::int8_t { Less, Greater, Incomparable };

/// Dense comparability table of a finite poset on positions 0..n-1.
class OrderTable {
 public:
  OrderTable() = default;
  /// n elements, all pairwise incomparable.
  explicit OrderTable(std::size_t n) : n_(n), cells_(n * n, Cmp::Incomparable) {}

  /// Builds the table from a strict order predicate less(i, j).  The
  /// predicate is trusted to be irreflexive, antisymmetric and transitive.
  static OrderTable from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less);

  std::size_t size() const { return n_; }
  Cmp at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  bool less(std::size_t i, std::size_t j) const { return at(i, j) == Cmp::Less; }
  bool comparable(std::size_t i, std::size_t j) const { return at(i, j) != Cmp::Incomparable; }

  /// Records i < j (and j > i).
  void set_less(std::size_t i, std::size_t j) {
    cells_[i * n_ + j] = Cmp::Less;
    cells_[j * n_ + i] = Cmp::Greater;
  }

  /// |I_x|: elements other than x incomparable to x.
  std::size_t incomparable_count(std::size_t x) const;
  /// Number of unordered incomparable pairs.
  std::uint64_t iota() const;

  /// The restriction of the order to the given positions, renumbered.
  OrderTable restrict(std::span<const std::size_t> positions) const;

 private:
  std::size_t n_ = 0;
  std::vector<Cmp> cells_;
};

/// x <_B y iff every point of b lies strictly left of the directed line
/// x -> y.  Throws DegenerateInput if a point of b lies on the line.
Cmp less_under(const Point& x, const Point& y, std::span<const Point> b);

/// Comparability data for a separated pair: (A, <_B) and (B, <_A).
struct PairPoset {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  OrderTable on_a;  // positions index into a
  OrderTable on_b;  // positions index into b
  std::uint64_t iota_a = 0;
  std::uint64_t iota_b = 0;

  std::uint64_t iota_sum() const { return iota_a + iota_b; }
  bool is_zero_avoiding() const { return iota_a == 0 && iota_b == 0; }
};

inline constexpr std::size_t kPosetSizeCap = 4096;

/// Throws NotSeparated if the hulls meet, TooLarge beyond size_cap.
PairPoset build_pair_poset(std::span<const VertexId> a, std::span<const VertexId> b, const PointSet& v,
                           std::size_t size_cap = kPosetSizeCap);

/// Blocks of positions; block i is entirely below block j for i < j.
struct Chain {
  std::vector<std::vector<std::size_t>> blocks;
};

/// Linear extension by Kahn's algorithm, smallest position first among the
/// available minimal elements.  Optionally restricted to a subset.
std::vector<std::size_t> linear_extension(const OrderTable& order);
std::vector<std::size_t> linear_extension(const OrderTable& order, std::span<const std::size_t> subset);

/// k disjoint n-element blocks, each an interval of a linear extension of
/// the low-incomparability elements, with a floor(2T) buffer between them,
/// T = (|P| - nk) / (4k).  Throws HypothesisViolated unless |P| > nk and
/// iota(P) <= (|P| - nk)^2 / (16k).
Chain interval_chains(const OrderTable& order, std::size_t n, std::size_t k);

/// Relaxed extraction for posets outside the hypothesis: scans a linear
/// extension and keeps an element only if it lies above every element of
/// the already closed blocks.  Returns at most max_blocks blocks.
Chain greedy_interval_chains(const OrderTable& order, std::size_t n, std::size_t max_blocks);

/// Every element of block i is below every element of block j, i < j, and
/// blocks are disjoint.
bool blocks_ordered(const OrderTable& order, const Chain& chain);

/// A maximum chain x_1 < x_2 < ... under the strict order precedes(i, j),
/// by longest-path dynamic programming.  Among maximum chains the
/// lexicographically smallest index sequence is returned.
std::vector<std::size_t> longest_chain(std::size_t count,
                                       const std::function<bool(std::size_t, std::size_t)>& precedes);

}  // namespace crossfam
