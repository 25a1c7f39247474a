#include "crossfam/family.hpp"

#include "crossfam/errors.hpp"

namespace crossfam {

std::string to_string(FamilyMode mode) { return mode == FamilyMode::Crossing ? "crossing" : "avoiding"; }

FamilyMode parse_family_mode(const std::string& text) {
  if (text == "crossing") return FamilyMode::Crossing;
  if (text == "avoiding") return FamilyMode::Avoiding;
  throw Error("unknown family mode '" + text + "'");
}

bool related(const Segment& s1, const Segment& s2, const PointSet& v, FamilyMode mode) {
  return mode == FamilyMode::Crossing ? segments_cross(s1, s2, v) : segments_avoiding(s1, s2, v);
}

std::string to_string(FamilyWitness::Kind kind) {
  switch (kind) {
    case FamilyWitness::Kind::NotAnEdge: return "not-an-edge";
    case FamilyWitness::Kind::SharedEndpoint: return "shared-endpoint";
    case FamilyWitness::Kind::RelationFails: return "relation-fails";
    case FamilyWitness::Kind::Degenerate: return "degenerate";
  }
  return "unknown";
}

std::optional<FamilyWitness> verify_family(const SegmentFamily& f, const GeometricGraph& g) {
  const PointSet& v = g.vertices();
  for (std::size_t i = 0; i < f.segments.size(); ++i) {
    const Segment& s = f.segments[i];
    if (s.a >= v.size() || s.b >= v.size() || s.a == s.b || !g.has_edge(s.a, s.b)) {
      return FamilyWitness{FamilyWitness::Kind::NotAnEdge, i, i};
    }
  }
  for (std::size_t i = 0; i < f.segments.size(); ++i) {
    for (std::size_t j = i + 1; j < f.segments.size(); ++j) {
      const Segment& s = f.segments[i];
      const Segment& t = f.segments[j];
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) {
        return FamilyWitness{FamilyWitness::Kind::SharedEndpoint, i, j};
      }
      try {
        if (!related(s, t, v, f.mode)) return FamilyWitness{FamilyWitness::Kind::RelationFails, i, j};
      } catch (const DegenerateInput&) {
        return FamilyWitness{FamilyWitness::Kind::Degenerate, i, j};
      }
    }
  }
  return std::nullopt;
}

bool certify(SegmentFamily& f, const GeometricGraph& g) {
  f.verified = !verify_family(f, g).has_value();
  return f.verified;
}

}  // namespace crossfam
