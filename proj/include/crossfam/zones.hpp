#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crossfam/errors.hpp"
#include "crossfam/geom.hpp"
#include "crossfam/rational.hpp"

namespace crossfam {

/// {(x, y) : a*x + b*y + c = 0}, reduced by gcd with the first nonzero of
/// (a, b) positive, so equal lines compare equal.
struct Line {
  std::int64_t a = 0;
  std::int64_t b = 0;
  __int128 c = 0;

  friend bool operator==(const Line&, const Line&) = default;
  friend bool operator<(const Line& l, const Line& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
};

Line line_through(const Point& p, const Point& q);
/// Sign of a*x + b*y + c at p: -1, 0 or +1.
int side_of(const Line& line, const Point& p);
std::string to_string(const Line& line);

struct ZoneLineSet {
  std::vector<Line> lines;
  Rational epsilon;
  std::uint64_t seed = 0;
  std::vector<VertexId> net;  // Q, every line passes through two of these
  bool verified = false;
};

/// Which lines the zone audit checks.
struct CandidateLines {
  enum class Kind { AllDetermined, Sampled };
  Kind kind = Kind::AllDetermined;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static CandidateLines all_determined() { return {}; }
  static CandidateLines sampled(std::size_t count, std::uint64_t seed) { return {Kind::Sampled, count, seed}; }
};

/// Candidate lines through point pairs of v, in a fixed order.
std::vector<Line> candidate_lines(const PointSet& v, const CandidateLines& which);

inline constexpr double kDefaultNetConstant = 40.0;
inline constexpr unsigned kZoneAttempts = 16;

/// min(|V|, max(2, ceil(C * (1/eps) * ln(1/eps)))).
std::size_t net_sample_size(std::size_t n, const Rational& eps, double net_constant = kDefaultNetConstant);

/// Seeded sample of V without replacement, intended as an eps/4-net for
/// angular sectors.  Indices ascending.
std::vector<VertexId> sample_sector_net(const PointSet& v, const Rational& eps, std::uint64_t seed,
                                        double net_constant = kDefaultNetConstant);

/// All distinct lines through pairs of net points.
std::vector<Line> lines_through(const PointSet& v, std::span<const VertexId> net);

class VerificationExhausted : public Error {
 public:
  VerificationExhausted(const Line& worst, std::uint64_t count)
      : Error("zone verification failed on every attempt; worst line " + to_string(worst) + " has zone count " +
              std::to_string(count)),
        worst_(worst), count_(count) {}
  const Line& worst_line() const { return worst_; }
  std::uint64_t worst_count() const { return count_; }

 private:
  Line worst_;
  std::uint64_t count_;
};

struct ZoneOptions {
  double net_constant = kDefaultNetConstant;
  unsigned max_attempts = kZoneAttempts;
};

/// Samples a net, takes every line through two net points, and audits the
/// zone bound against the candidate lines.  Resamples with seed+1, seed+2,
/// ... on failure and throws VerificationExhausted after max_attempts.
ZoneLineSet build_zone_lines(const PointSet& v, const Rational& eps, std::uint64_t seed,
                             const CandidateLines& audit = CandidateLines::all_determined(),
                             const ZoneOptions& options = {});

/// Lines through a net of at most max_net points, without any audit.
ZoneLineSet unverified_zone_lines(const PointSet& v, const Rational& eps, std::uint64_t seed,
                                  std::size_t max_net, double net_constant = kDefaultNetConstant);

/// Number of points of v in open cells of the arrangement that ell passes
/// through.  Points on a line of the arrangement are never counted, and a
/// line of the arrangement has zone count 0.  Decided per point by exact
/// one-dimensional feasibility of the cell restricted to ell.
std::uint64_t zone_point_count(const ZoneLineSet& lines, const Line& ell, const PointSet& v);

/// Same count by walking ell through the arrangement; built once per line
/// set and reused for many query lines.
class ZoneCounter {
 public:
  ZoneCounter(std::span<const Line> lines, const PointSet& v);
  std::uint64_t count(const Line& ell) const;

 private:
  struct Cell {
    std::vector<std::uint64_t> bits;
    std::uint64_t points = 0;
  };
  std::vector<Line> lines_;
  std::vector<std::uint64_t> keys_;
  std::vector<Cell> cells_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash_;
  std::vector<Line> sorted_lines_;
};

struct ZoneWitness {
  Line line;
  std::uint64_t count = 0;
};

/// First candidate (in candidate order) whose zone holds more than eps*|V|
/// points, or nullopt if the property holds for all of them.
std::optional<ZoneWitness> verify_zone_property(const ZoneLineSet& lines, const PointSet& v, const Rational& eps,
                                                const CandidateLines& candidates);

}  // namespace crossfam
