#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/geom.hpp"

namespace crossfam {

// pointset v1 n=<N>, then N lines "<x> <y>".
std::string render_points(const PointSet& v);
PointSet parse_points(std::string_view text);

struct GraphFile {
  PointSet points;
  bool complete = false;
  std::vector<Edge> edges;  // empty when complete

  GeometricGraph graph() const;
  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

// Point file followed by "edges complete" or "edges m=<M>" and M lines "<i> <j>".
std::string render_graph(const GraphFile& g);
GraphFile parse_graph(std::string_view text);

struct ResultFile {
  FamilyMode mode = FamilyMode::Crossing;
  std::string run = "practical";
  std::vector<Segment> segments;
  bool verified = false;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  std::int64_t wall_us = 0;  // written as milliseconds with three decimals

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

std::string render_result(const ResultFile& r);
ResultFile parse_result(std::string_view text);

/// The rendered result without its wall-clock line.
std::string strip_timing(std::string_view rendered);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace crossfam
