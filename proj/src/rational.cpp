#include "ifss/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ifss {

namespace {

using int128 = __int128;

long long narrow(int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("Rational: value exceeds 64-bit range");
  }
  return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = narrow(-static_cast<int128>(num));
    den = narrow(-static_cast<int128>(den));
  }
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::from_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  int128 num = 0;
  int128 den = 1;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
    }
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
    if (num > std::numeric_limits<long long>::max() || den > std::numeric_limits<long long>::max()) {
      throw std::overflow_error("Rational: decimal literal too long");
    }
    any_digit = true;
  }
  if (!any_digit) throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(narrow(num), narrow(den));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<int128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  int128 n = static_cast<int128>(num_) * rhs.den_ + static_cast<int128>(rhs.num_) * den_;
  int128 d = static_cast<int128>(den_) * rhs.den_;
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  int128 n = static_cast<int128>(num_) * rhs.num_;
  int128 d = static_cast<int128>(den_) * rhs.den_;
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  Rational inv;
  inv.num_ = rhs.num_ < 0 ? narrow(-static_cast<int128>(rhs.den_)) : rhs.den_;
  inv.den_ = rhs.num_ < 0 ? narrow(-static_cast<int128>(rhs.num_)) : rhs.num_;
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int128 l = static_cast<int128>(lhs.num_) * rhs.den_;
  int128 r = static_cast<int128>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_decimal6(const Rational& r) {
  int128 scaled2 = static_cast<int128>(r.num()) * 2000000;
  int128 q = scaled2 / r.den();
  if (q >= 0) q += 1;
  else q -= 1;
  q /= 2;  // round half away from zero on the 10^6 grid
  bool neg = q < 0;
  if (neg) q = -q;
  auto mag = static_cast<unsigned long long>(q);
  std::string frac = std::to_string(mag % 1000000);
  frac.insert(0, 6 - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + std::to_string(mag / 1000000);
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace ifss
