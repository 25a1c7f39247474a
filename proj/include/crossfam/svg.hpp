#pragma once

#include <string>

#include "crossfam/family.hpp"
#include "crossfam/geom.hpp"

namespace crossfam {

/// Points, graph edges in gray and the family on top.  The y axis points up;
/// the viewBox is the bounding box plus a margin of 4 units.
std::string render_svg(const GeometricGraph& g, const SegmentFamily& family);

}  // namespace crossfam
