#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nlosc/rational.hpp"

using nlosc::Rational;
using nlosc::parse_rational;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
  CHECK(Rational(1, 2).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(1, 2) > Rational(0));
  CHECK(Rational(3) >= Rational(3));
  CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("overflow throws instead of wrapping") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rational(3), std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
  // Reduction can rescue large intermediates.
  CHECK(Rational(INT64_MAX - 1, 2) * Rational(2, INT64_MAX - 1) ==
        Rational(1));
}

TEST_CASE("exact square roots") {
  CHECK(Rational(4).sqrt() == Rational(2));
  CHECK(Rational(9, 16).sqrt() == Rational(3, 4));
  CHECK(Rational(0).sqrt() == Rational(0));
  CHECK(Rational(1, 100).sqrt() == Rational(1, 10));
  CHECK(!Rational(2).sqrt().has_value());
  CHECK(!Rational(-4).sqrt().has_value());
  CHECK(!Rational(4, 3).sqrt().has_value());
  // Near-square: 10^9+1 is not a perfect square.
  CHECK(!Rational(1000000001).sqrt().has_value());
  CHECK(Rational(1000000000000000000, 1).sqrt() == Rational(1000000000));
}

TEST_CASE("str round trip") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(parse_rational(Rational(-22, 7).str()) == Rational(-22, 7));
}

TEST_CASE("parse_rational accepts ints, fractions, and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+3") == Rational(3));
  CHECK(parse_rational("1/10") == Rational(1, 10));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2.") == Rational(2));
  CHECK(parse_rational("0.000000000001") == Rational(1, 1000000000000));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.0000000000001"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("99999999999999999999"), std::overflow_error);
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  for (int iter = 0; iter < 500; ++iter) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}
