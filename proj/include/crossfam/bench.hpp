#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossfam/crossing.hpp"

namespace crossfam {

struct BenchRow {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::size_t family_size = 0;
  double ms = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::optional<double> slope;  // least squares fit of log(median ms) on log n
};

/// Complete graphs on random-disk points, one instance per (n, trial).
BenchReport run_bench(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed,
                      const RunConfig& cfg);

/// Fitted log-log slope of median runtime against n; nullopt for fewer
/// than two distinct sizes.
std::optional<double> loglog_slope(const std::vector<BenchRow>& rows);

std::string render_csv(const BenchReport& report);

}  // namespace crossfam
