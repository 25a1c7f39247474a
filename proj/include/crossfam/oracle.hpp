#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/geom.hpp"

namespace crossfam {

inline constexpr std::size_t kOracleLimit = 120;

/// Nodes are the edges of G; two nodes are adjacent iff their segments
/// cross (avoid each other).
class RelationGraph {
 public:
  RelationGraph(const GeometricGraph& g, FamilyMode mode);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Edge>& nodes() const { return nodes_; }
  bool adjacent(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1U; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }

 private:
  std::vector<Edge> nodes_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Indices of a maximum clique; the lexicographically smallest one.
std::vector<std::size_t> maximum_clique(const RelationGraph& r);

/// Exact maximum family by clique search.  Throws TooLarge when G has more
/// than limit edges and EmptyGraph when it has none.
SegmentFamily max_family_bruteforce(const GeometricGraph& g, FamilyMode mode, std::size_t limit = kOracleLimit);

}  // namespace crossfam
