#include "crossfam/svg.hpp"

#include <algorithm>
#include <sstream>

namespace crossfam {

std::string render_svg(const GeometricGraph& g, const SegmentFamily& family) {
  const PointSet& v = g.vertices();
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (!v.empty()) {
    xmin = xmax = v[0].x;
    ymin = ymax = v[0].y;
  }
  for (const Point& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  constexpr std::int64_t margin = 4;
  const std::int64_t width = xmax - xmin + 2 * margin;
  const std::int64_t height = ymax - ymin + 2 * margin;
  const double unit = static_cast<double>(std::max(width, height)) / 400.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - margin << ' ' << -ymax - margin << ' '
      << width << ' ' << height << "\">\n";
  out << "<g transform=\"scale(1,-1)\">\n";
  out << "<g stroke=\"#bbbbbb\" stroke-width=\"" << unit * 0.5 << "\">\n";
  const bool dense = g.edge_count() > 20000;
  if (!dense) {
    for (const Edge& e : g.edges()) {
      out << "<line x1=\"" << v[e.u].x << "\" y1=\"" << v[e.u].y << "\" x2=\"" << v[e.v].x << "\" y2=\"" << v[e.v].y
          << "\"/>\n";
    }
  }
  out << "</g>\n";
  const char* colour = family.mode == FamilyMode::Crossing ? "#d62728" : "#1f77b4";
  out << "<g stroke=\"" << colour << "\" stroke-width=\"" << unit * 2 << "\">\n";
  for (const Segment& s : family.segments) {
    out << "<line x1=\"" << v[s.a].x << "\" y1=\"" << v[s.a].y << "\" x2=\"" << v[s.b].x << "\" y2=\"" << v[s.b].y
        << "\"/>\n";
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (const Point& p : v) out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << unit * 2 << "\"/>\n";
  out << "</g>\n</g>\n</svg>\n";
  return out.str();
}

}  // namespace crossfam
