#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crossfam/geom.hpp"

namespace crossfam {

enum class FamilyMode { Crossing, Avoiding };

std::string to_string(FamilyMode mode);
/// "crossing" or "avoiding"; throws Error otherwise.
FamilyMode parse_family_mode(const std::string& text);

struct SegmentFamily {
  FamilyMode mode = FamilyMode::Crossing;
  std::vector<Segment> segments;
  bool verified = false;

  std::size_t size() const { return segments.size(); }
};

/// The relation the family must satisfy on every pair.
bool related(const Segment& s1, const Segment& s2, const PointSet& v, FamilyMode mode);

struct FamilyWitness {
  enum class Kind { NotAnEdge, SharedEndpoint, RelationFails, Degenerate };
  Kind kind = Kind::RelationFails;
  std::size_t first = 0;   // segment index
  std::size_t second = 0;  // equals first for NotAnEdge
};

std::string to_string(FamilyWitness::Kind kind);

/// Checks every segment against G and every unordered pair against the
/// mode's relation.  Returns the first failure in index order.
std::optional<FamilyWitness> verify_family(const SegmentFamily& f, const GeometricGraph& g);

/// verify_family, then sets f.verified accordingly.
bool certify(SegmentFamily& f, const GeometricGraph& g);

}  // namespace crossfam
