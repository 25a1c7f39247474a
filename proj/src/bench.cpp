#include "crossfam/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "crossfam/generate.hpp"

namespace crossfam {

BenchReport run_bench(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed,
                      const RunConfig& cfg) {
  BenchReport report;
  for (std::size_t n : sizes) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const std::uint64_t instance_seed = seed + 1000003ULL * n + trial;
      GeometricGraph g = GeometricGraph::complete(generate_points(PointKind::RandomDisk, n, instance_seed));
      RunConfig c = cfg;
      c.seed = instance_seed;
      const auto start = std::chrono::steady_clock::now();
      SegmentFamily f = find_family(g, c);
      const auto stop = std::chrono::steady_clock::now();
      report.rows.push_back({n, trial, f.size(), std::chrono::duration<double, std::milli>(stop - start).count()});
    }
  }
  report.slope = loglog_slope(report.rows);
  return report;
}

std::optional<double> loglog_slope(const std::vector<BenchRow>& rows) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const BenchRow& r : rows) by_n[r.n].push_back(r.ms);
  std::vector<std::pair<double, double>> pts;
  for (auto& [n, ms] : by_n) {
    std::sort(ms.begin(), ms.end());
    const std::size_t h = ms.size() / 2;
    const double median = ms.size() % 2 ? ms[h] : (ms[h - 1] + ms[h]) / 2;
    pts.emplace_back(std::log(static_cast<double>(n)), std::log(std::max(median, 1e-6)));
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

std::string render_csv(const BenchReport& report) {
  std::string out = "n,trial,family_size,ms\n";
  for (const BenchRow& r : report.rows) out += fmt::format("{},{},{},{:.3f}\n", r.n, r.trial, r.family_size, r.ms);
  out += report.slope ? fmt::format("# slope {:.4f}\n", *report.slope) : "# slope n/a\n";
  return out;
}

}  // namespace crossfam
