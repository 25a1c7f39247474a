#include "crossfam/zones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossfam/random.hpp"

namespace crossfam {
namespace {

using i128 = __int128;
using boost::multiprecision::int256_t;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int sign(i128 v) { return (v > 0) - (v < 0); }

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  std::string s;
  // Work on the negative range so the minimum value needs no special case.
  if (!negative) v = -v;
  while (v != 0) {
    s.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

// Restriction of a line's value to the query line ell, parametrized by t:
// sign(value at point(t)) = sign(alpha * t + beta).
struct Restricted {
  i128 alpha = 0;
  i128 beta = 0;
};

Restricted restrict_to(const Line& line, const Line& ell) {
  Restricted r;
  if (ell.b != 0) {
    // x = t, y = -(a t + c) / b
    r.alpha = static_cast<i128>(line.a) * ell.b - static_cast<i128>(line.b) * ell.a;
    r.beta = line.c * ell.b - static_cast<i128>(line.b) * ell.c;
    if (ell.b < 0) {
      r.alpha = -r.alpha;
      r.beta = -r.beta;
    }
  } else {
    // x = -c / a, y = t; normalization makes a > 0 here.
    r.alpha = static_cast<i128>(line.b) * ell.a;
    r.beta = line.c * ell.a - static_cast<i128>(line.a) * ell.c;
  }
  return r;
}

// The root -beta/alpha as a fraction with positive denominator.
struct Root {
  i128 num = 0;
  i128 den = 1;
  long double approx = 0;
};

Root root_of(const Restricted& r) {
  Root root;
  root.num = r.alpha > 0 ? -r.beta : r.beta;
  root.den = abs128(r.alpha);
  root.approx = static_cast<long double>(root.num) / static_cast<long double>(root.den);
  return root;
}

// Exact three-way comparison, filtered through the long double estimate.
int compare(const Root& l, const Root& r) {
  const long double tol = 8 * std::numeric_limits<long double>::epsilon() * (std::fabs(l.approx) + std::fabs(r.approx));
  if (l.approx < r.approx - tol) return -1;
  if (l.approx > r.approx + tol) return 1;
  int256_t lhs = int256_t(l.num) * int256_t(r.den);
  int256_t rhs = int256_t(r.num) * int256_t(l.den);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

i128 evaluate(const Line& line, const Point& p) {
  return static_cast<i128>(line.a) * p.x + static_cast<i128>(line.b) * p.y + line.c;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool zone_within(std::uint64_t count, const Rational& eps, std::size_t n) { return at_most(count, eps, n); }

}  // namespace

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw DegenerateInput("line through coincident points");
  i128 a = static_cast<i128>(p.y) - q.y;
  i128 b = static_cast<i128>(q.x) - p.x;
  i128 c = static_cast<i128>(p.x) * q.y - static_cast<i128>(q.x) * p.y;
  i128 g = gcd128(gcd128(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), c};
}

int side_of(const Line& line, const Point& p) { return sign(evaluate(line, p)); }

std::string to_string(const Line& line) {
  return std::to_string(line.a) + "x+" + std::to_string(line.b) + "y+" + i128_to_string(line.c) + "=0";
}

std::vector<Line> candidate_lines(const PointSet& v, const CandidateLines& which) {
  const auto n = static_cast<VertexId>(v.size());
  std::vector<Line> out;
  if (n < 2) return out;
  if (which.kind == CandidateLines::Kind::AllDetermined) {
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i + 1; j < n; ++j) out.push_back(line_through(v[i], v[j]));
    }
    return out;
  }
  Rng rng(which.seed);
  std::set<std::pair<VertexId, VertexId>> seen;
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t want = std::min(which.count, total);
  while (seen.size() < want) {
    auto i = static_cast<VertexId>(rng.below(n));
    auto j = static_cast<VertexId>(rng.below(n));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (seen.emplace(i, j).second) out.push_back(line_through(v[i], v[j]));
  }
  return out;
}

std::size_t net_sample_size(std::size_t n, const Rational& eps, double net_constant) {
  if (eps <= Rational(0) || eps > Rational(1)) throw PreconditionViolated("zone parameter must lie in (0, 1]");
  const double inv = static_cast<double>(eps.den()) / static_cast<double>(eps.num());
  const double raw = std::ceil(net_constant * inv * std::log(inv));
  std::size_t size = raw < 2.0 ? 2 : (raw > 1e18 ? std::numeric_limits<std::size_t>::max()
                                                 : static_cast<std::size_t>(raw));
  return std::min(size, n);
}

std::vector<VertexId> sample_sector_net(const PointSet& v, const Rational& eps, std::uint64_t seed,
                                        double net_constant) {
  const std::size_t size = net_sample_size(v.size(), eps, net_constant);
  Rng rng(seed);
  return rng.sample(static_cast<std::uint32_t>(v.size()), static_cast<std::uint32_t>(size));
}

std::vector<Line> lines_through(const PointSet& v, std::span<const VertexId> net) {
  std::vector<Line> out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) out.push_back(line_through(v[net[i]], v[net[j]]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t zone_point_count(const ZoneLineSet& set, const Line& ell, const PointSet& v) {
  if (std::find(set.lines.begin(), set.lines.end(), ell) != set.lines.end()) return 0;
  std::vector<Restricted> restricted;
  restricted.reserve(set.lines.size());
  for (const Line& line : set.lines) restricted.push_back(restrict_to(line, ell));

  std::uint64_t count = 0;
  for (const Point& p : v) {
    std::optional<Root> lower, upper;
    bool feasible = true;
    for (std::size_t i = 0; i < set.lines.size() && feasible; ++i) {
      const int s = side_of(set.lines[i], p);
      if (s == 0) {
        feasible = false;
        break;
      }
      const Restricted& r = restricted[i];
      if (r.alpha == 0) {
        feasible = sign(r.beta) == s;
        continue;
      }
      Root root = root_of(r);
      // sign(alpha t + beta) == s  <=>  t above the root iff s * alpha > 0
      if ((s > 0) == (r.alpha > 0)) {
        if (!lower || compare(root, *lower) > 0) lower = root;
      } else {
        if (!upper || compare(root, *upper) < 0) upper = root;
      }
    }
    if (feasible && lower && upper) feasible = compare(*lower, *upper) < 0;
    if (feasible) ++count;
  }
  return count;
}

ZoneCounter::ZoneCounter(std::span<const Line> lines, const PointSet& v)
    : lines_(lines.begin(), lines.end()), sorted_lines_(lines.begin(), lines.end()) {
  std::sort(sorted_lines_.begin(), sorted_lines_.end());
  keys_.reserve(lines_.size());
  for (std::size_t i = 0; i < lines_.size(); ++i) keys_.push_back(mix(0x5eed0000ULL + i));

  const std::size_t words = (lines_.size() + 63) / 64;
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  for (const Point& p : v) {
    std::vector<std::uint64_t> bits(words, 0);
    std::uint64_t hash = 0;
    bool on_line = false;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const int s = side_of(lines_[i], p);
      if (s == 0) {
        on_line = true;
        break;
      }
      if (s > 0) {
        bits[i / 64] |= std::uint64_t{1} << (i % 64);
        hash ^= keys_[i];
      }
    }
    if (on_line) continue;
    bool merged = false;
    auto [lo, hi] = by_hash_.equal_range(hash);
    for (auto it = lo; it != hi; ++it) {
      if (cells_[it->second].bits == bits) {
        ++cells_[it->second].points;
        merged = true;
        break;
      }
    }
    if (!merged) {
      by_hash_.emplace(hash, cells_.size());
      cells_.push_back({std::move(bits), 1});
    }
  }
}

std::uint64_t ZoneCounter::count(const Line& ell) const {
  if (cells_.empty()) return 0;
  if (std::binary_search(sorted_lines_.begin(), sorted_lines_.end(), ell)) return 0;

  const std::size_t words = (lines_.size() + 63) / 64;
  std::vector<std::uint64_t> bits(words, 0);
  std::uint64_t hash = 0;
  struct Event {
    Root root;
    std::size_t line;
  };
  std::vector<Event> events;
  events.reserve(lines_.size());
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    Restricted r = restrict_to(lines_[i], ell);
    // Side at t -> -infinity.
    const bool positive = r.alpha == 0 ? r.beta > 0 : r.alpha < 0;
    if (positive) {
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
      hash ^= keys_[i];
    }
    if (r.alpha != 0) events.push_back({root_of(r), i});
  }
  std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) { return compare(l.root, r.root) < 0; });

  std::uint64_t total = 0;
  auto visit = [&]() {
    auto [lo, hi] = by_hash_.equal_range(hash);
    for (auto it = lo; it != hi; ++it) {
      if (cells_[it->second].bits == bits) {
        total += cells_[it->second].points;
        return;
      }
    }
  };
  visit();
  for (std::size_t e = 0; e < events.size();) {
    std::size_t f = e;
    while (f < events.size() && compare(events[f].root, events[e].root) == 0) {
      const std::size_t i = events[f].line;
      bits[i / 64] ^= std::uint64_t{1} << (i % 64);
      hash ^= keys_[i];
      ++f;
    }
    visit();
    e = f;
  }
  return total;
}

std::optional<ZoneWitness> verify_zone_property(const ZoneLineSet& set, const PointSet& v, const Rational& eps,
                                                const CandidateLines& candidates) {
  // Without a point in an open cell every zone is empty.
  if (set.net.size() == v.size() && v.size() >= 2) return std::nullopt;
  ZoneCounter counter(set.lines, v);
  for (const Line& ell : candidate_lines(v, candidates)) {
    const std::uint64_t c = counter.count(ell);
    if (!zone_within(c, eps, v.size())) return ZoneWitness{ell, c};
  }
  return std::nullopt;
}

ZoneLineSet build_zone_lines(const PointSet& v, const Rational& eps, std::uint64_t seed, const CandidateLines& audit,
                             const ZoneOptions& options) {
  std::optional<ZoneWitness> worst;
  for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
    ZoneLineSet set;
    set.epsilon = eps;
    set.seed = seed + attempt;
    set.net = sample_sector_net(v, eps, set.seed, options.net_constant);
    set.lines = lines_through(v, set.net);
    std::optional<ZoneWitness> witness = verify_zone_property(set, v, eps, audit);
    if (!witness) {
      set.verified = true;
      return set;
    }
    if (!worst || witness->count > worst->count) worst = witness;
  }
  throw VerificationExhausted(worst ? worst->line : Line{}, worst ? worst->count : 0);
}

ZoneLineSet unverified_zone_lines(const PointSet& v, const Rational& eps, std::uint64_t seed, std::size_t max_net,
                                  double net_constant) {
  ZoneLineSet set;
  set.epsilon = eps;
  set.seed = seed;
  const std::size_t size = std::min(net_sample_size(v.size(), eps, net_constant), max_net);
  if (size >= 2) {
    Rng rng(seed);
    set.net = rng.sample(static_cast<std::uint32_t>(v.size()), static_cast<std::uint32_t>(size));
    set.lines = lines_through(v, set.net);
  }
  return set;
}

}  // namespace crossfam
