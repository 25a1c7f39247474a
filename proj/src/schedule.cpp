#include "crossfam/schedule.hpp"

#include <cmath>

#include "crossfam/errors.hpp"

namespace crossfam {
namespace {

BigInt pow_big(const BigInt& base, unsigned long long e) {
  BigInt r = 1, b = base;
  while (e > 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

unsigned long long choose2(unsigned s) { return static_cast<unsigned long long>(s) * (s - 1) / 2; }

}  // namespace

BigInt ceil_power(std::uint64_t n, const BigRational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt p = numerator(x), q = denominator(x);
  if (p < 0) throw PreconditionViolated("negative exponent");
  const BigInt target = pow_big(BigInt(n), p.convert_to<unsigned long long>());
  const auto qq = q.convert_to<unsigned long long>();
  // c^q >= n^p, binary search on c.
  BigInt lo = 0, hi = 1;
  while (pow_big(hi, qq) < target) hi *= 2;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (pow_big(mid, qq) >= target) hi = mid;
    else lo = mid;
  }
  return target <= 1 ? BigInt(target == 0 ? 0 : 1) : hi;
}

ParamSchedule theory_params_complete(unsigned s) {
  if (s < 1) throw PreconditionViolated("recursion depth s must be at least 1");
  ParamSchedule sch;
  sch.mode = ScheduleMode::Complete;
  sch.s = s;
  for (unsigned l = s; l >= 1; --l) {
    LevelParams lv;
    lv.level = l;
    lv.K = pow_big(8, choose2(l));
    lv.M = pow_big(9, l) * lv.K;
    lv.eps = BigRational(1, pow_big(2, 3ULL * l + 11));
    lv.delta = 1;
    if (l >= 2) {
      lv.t = 8;
      lv.k = pow_big(8, l - 1);
      lv.m = lv.M / (9 * lv.k);
    }
    sch.levels.push_back(lv);
  }
  sch.K = sch.levels.front().K;
  sch.M = sch.levels.front().M;
  sch.eps = sch.levels.front().eps;
  sch.delta = 1;
  // Dense pair search on the complete graph (delta = 1/3): n >= c M eps^-4 delta^-5.
  sch.size_requirement = sch.M * pow_big(2, 4ULL * (3ULL * s + 11)) * pow_big(3, 5);
  sch.size_requirement_text = "n >= c * " + sch.size_requirement.str();
  return sch;
}

ParamSchedule theory_params_dense(std::uint64_t n, const BigRational& x, unsigned s) {
  if (s < 1) throw PreconditionViolated("recursion depth s must be at least 1");
  if (x <= 0 || x > 1) throw PreconditionViolated("density exponent must lie in (0, 1]");
  ParamSchedule sch;
  sch.mode = ScheduleMode::Dense;
  sch.s = s;
  sch.x = x;
  sch.u = pow_big(8, s) * ceil_power(n, x);
  const BigInt& u = sch.u;

  // Levels bottom-up so that M_l can use M_(l-1).
  std::vector<LevelParams> up;
  for (unsigned l = 1; l <= s; ++l) {
    LevelParams lv;
    lv.level = l;
    lv.K = pow_big(512 * u, choose2(l));
    lv.eps = BigRational(1, 32 * pow_big(u, l + 2ULL));
    lv.delta = BigRational(pow_big(8, l), u);
    if (l == 1) {
      lv.M = 1;
    } else {
      lv.t = u / pow_big(8, l - 1);
      lv.k = pow_big(512 * u, l - 1);
      lv.m = up.back().M;
      lv.M = (lv.t + 1) * lv.k * lv.m;
    }
    up.push_back(lv);
  }
  sch.levels.assign(up.rbegin(), up.rend());
  sch.K = sch.levels.front().K;
  sch.M = sch.levels.front().M;
  sch.eps = sch.levels.front().eps;
  sch.delta = sch.levels.front().delta;
  sch.size_requirement = pow_big(32, 4) * pow_big(u, 5ULL * s + 13) * sch.K;
  sch.size_requirement_text = "n >= c * " + sch.size_requirement.str();
  return sch;
}

ParamSchedule theory_params(std::uint64_t n, const std::optional<BigRational>& x, unsigned s) {
  return x ? theory_params_dense(n, *x, s) : theory_params_complete(s);
}

BigRational density_exponent(std::uint64_t n, std::uint64_t edges) {
  if (n < 2 || edges == 0) return 1;
  double x = 2.0 - std::log(static_cast<double>(edges)) / std::log(static_cast<double>(n));
  auto thousandths = static_cast<long long>(std::ceil(x * 1000.0));
  if (thousandths < 1) thousandths = 1;
  if (thousandths > 1000) thousandths = 1000;
  return BigRational(thousandths, 1000);
}

}  // namespace crossfam
