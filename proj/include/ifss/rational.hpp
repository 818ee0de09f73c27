#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ifss {

/// Exact rational on 64-bit integers, always reduced, denominator > 0.
/// Arithmetic runs through 128-bit intermediates and throws
/// std::overflow_error if a reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);

  /// Parses a plain decimal literal ("0.25", "-1.5", "2") exactly.
  static Rational from_decimal(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const;

  /// "103/90", or just "2" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  long long num_;
  long long den_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Shortest decimal rendering with at most six fractional digits; exact when
/// the denominator divides 10^6, rounded to six digits otherwise.
std::string to_decimal6(const Rational& r);

}  // namespace ifss
