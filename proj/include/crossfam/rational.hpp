#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace crossfam {

/// Exact rational number with 64-bit numerator and denominator.  Always
/// stored reduced with a positive denominator.  Arithmetic that would leave
/// the 64-bit range throws Overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design of the numeric type
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  /// Accepts "p/q", "p" or a finite decimal such as "0.25".
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// value <= r * scale, evaluated exactly.
bool at_most(std::uint64_t value, const Rational& r, std::uint64_t scale);
/// value >= r * scale, evaluated exactly.
bool at_least(std::uint64_t value, const Rational& r, std::uint64_t scale);

}  // namespace crossfam
