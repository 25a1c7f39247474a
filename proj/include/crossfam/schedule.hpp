#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossfam {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class ScheduleMode { Complete, Dense };

/// Parameters of one recursion level.  For level >= 2 the pair of size M is
/// split with (t, k) into blocks of size m = M at the level below.
struct LevelParams {
  unsigned level = 1;
  BigInt t, k, m;    // zero at level 1
  BigInt K, M;       // family size obtained and pair size needed
  BigRational eps;   // pair must be eps-avoiding
  BigRational delta; // and delta-dense
};

struct ParamSchedule {
  ScheduleMode mode = ScheduleMode::Complete;
  unsigned s = 1;
  BigRational x;  // density exponent, dense mode only
  BigInt u;       // dense mode only
  BigInt K, M;
  BigRational eps, delta;
  std::vector<LevelParams> levels;  // levels[0] is level s, last is level 1
  /// n >= c * coefficient lets the dense pair search succeed, c unknown.
  BigInt size_requirement;
  std::string size_requirement_text;
};

/// Complete graphs: K = 8^C(s,2), M = 9^s K, eps = 2^(-3s-11), splits with
/// t = 8 and k = 8^(l-1).
ParamSchedule theory_params_complete(unsigned s);

/// Graphs with n^(2-x) edges: u = 8^s ceil(n^x), delta = 8^s/u,
/// eps = 1/(32 u^(s+2)), K = (512u)^C(s,2); level l splits with
/// t = u/8^(l-1), k = (512u)^(l-1) and M_1 = 1.
ParamSchedule theory_params_dense(std::uint64_t n, const BigRational& x, unsigned s);

/// Dispatch on x: nullopt selects the complete-graph schedule.
ParamSchedule theory_params(std::uint64_t n, const std::optional<BigRational>& x, unsigned s);

/// Smallest integer c with c >= n^x, exactly.
BigInt ceil_power(std::uint64_t n, const BigRational& x);

/// x = 2 - log|E| / log n clamped to (0, 1], rounded up to a multiple of
/// 1/1000 so that it stays an exact rational.
BigRational density_exponent(std::uint64_t n, std::uint64_t edges);

}  // namespace crossfam
