#include "doctest.h"

#include <stdexcept>

#include "ifss/rational.hpp"

using ifss::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces and normalizes the sign") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(-6, 8) == Rational(-3, 4));
  CHECK(Rational(6, -8) == Rational(-3, 4));
  CHECK(Rational(-6, -8) == Rational(3, 4));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 4).den() == 4);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("from_decimal is exact") {
  CHECK(Rational::from_decimal("0.25") == Rational(1, 4));
  CHECK(Rational::from_decimal("0.1") == Rational(1, 10));
  CHECK(Rational::from_decimal("-1.5") == Rational(-3, 2));
  CHECK(Rational::from_decimal("2") == Rational(2));
  CHECK(Rational::from_decimal("0.16") == Rational(4, 25));
  CHECK(Rational::from_decimal(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal(""), std::invalid_argument);
}

TEST_CASE("arithmetic stays reduced") {
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
  CHECK((-Rational(5, 8)).num() == -5);
  CHECK(Rational(-5, 8).abs() == Rational(5, 8));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering crosses denominators") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(103, 90) > Rational(1));
  CHECK(ifss::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(ifss::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("str and to_double") {
  CHECK(Rational(103, 90).str() == "103/90");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(1, 4).to_double() == 0.25);
}

TEST_CASE("to_decimal6 renders exactly or rounds at six digits") {
  CHECK(ifss::to_decimal6(Rational(1, 2)) == "0.5");
  CHECK(ifss::to_decimal6(Rational(0)) == "0");
  CHECK(ifss::to_decimal6(Rational(1)) == "1");
  CHECK(ifss::to_decimal6(Rational(4, 25)) == "0.16");
  CHECK(ifss::to_decimal6(Rational(-3, 2)) == "-1.5");
  CHECK(ifss::to_decimal6(Rational(1, 1000000)) == "0.000001");
  CHECK(ifss::to_decimal6(Rational(1, 3)) == "0.333333");
  CHECK(ifss::to_decimal6(Rational(2, 3)) == "0.666667");
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(9000000000000000000LL);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("exact arithmetic is associative") {
  Rational a(7, 100), b(93, 100), c(41, 100);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
}

}  // TEST_SUITE
