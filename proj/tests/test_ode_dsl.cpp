#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nlosc/parse.hpp"

using namespace nlosc;

TEST_CASE("harmonic oscillator") {
  const PolynomialODE ode = parse_ode("x'' + x = 0");
  CHECK(ode.alphas.size() == 1);
  CHECK(ode.alphas.at(1) == Rational(1));
  CHECK(ode.lambdas.empty());
  CHECK(ode.w == Rational(1));
}

TEST_CASE("frequency inference") {
  CHECK(parse_ode("x'' + 4*x = 0").w == Rational(2));
  CHECK(parse_ode("x'' + 9/16*x = 0").w == Rational(3, 4));
  // not a perfect rational square -> w stays 1
  CHECK(parse_ode("x'' + 2*x = 0").w == Rational(1));
  // negative restoring coefficient -> no inference
  CHECK(parse_ode("x'' - 4*x = 0").w == Rational(1));
  // no linear term at all
  CHECK(parse_ode("x'' + x^3 = 0").w == Rational(1));
}

TEST_CASE("frequency override wins") {
  const PolynomialODE ode = parse_ode("x'' + 4*x = 0", Rational(3));
  CHECK(ode.w == Rational(3));
  CHECK_THROWS_AS(parse_ode("x'' + x = 0", Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ode("x'' + x = 0", Rational(-1)),
                  std::invalid_argument);
}

TEST_CASE("quartic force term") {
  const PolynomialODE ode = parse_ode("x'' + x + 1/10*x^3 = 0");
  CHECK(ode.alphas.at(1) == Rational(1));
  CHECK(ode.alphas.at(3) == Rational(1, 10));
  CHECK(ode.w == Rational(1));
}

TEST_CASE("velocity couplings") {
  const PolynomialODE a = parse_ode("x'' + x + 1/10*(x')^2*x = 0");
  CHECK(a.lambdas.at({2, 1}) == Rational(1, 10));
  // parenthesized and bare velocity powers agree
  const PolynomialODE b = parse_ode("x'' + x + 1/10*x'^2*x = 0");
  CHECK(a == b);
  const PolynomialODE c = parse_ode("x'' + x' = 0");
  CHECK(c.lambdas.at({1, 0}) == Rational(1));
}

TEST_CASE("leading coefficient is divided through") {
  const PolynomialODE ode = parse_ode("2*x'' + 4*x - 1*x^2 = 0");
  CHECK(ode.alphas.at(1) == Rational(2));
  CHECK(ode.alphas.at(2) == Rational(-1, 2));
  // negated leading term flips every sign
  const PolynomialODE neg = parse_ode("-x'' + 4*x = 0");
  CHECK(neg.alphas.at(1) == Rational(-4));
}

TEST_CASE("decimal coefficients convert exactly") {
  const PolynomialODE ode = parse_ode("x'' + x + 0.1*x^3 = 0");
  CHECK(ode.alphas.at(3) == Rational(1, 10));
  CHECK(parse_ode("x'' + 0.000000000001*x = 0").alphas.at(1) ==
        Rational(1, 1000000000000));
}

TEST_CASE("repeated monomials fold and cancel") {
  const PolynomialODE ode = parse_ode("x'' + x + x + x^2 - x^2 = 0");
  CHECK(ode.alphas.at(1) == Rational(2));
  CHECK(ode.alphas.count(2) == 0);
  // products of factors accumulate powers
  const PolynomialODE prod = parse_ode("x'' + x*x^2 = 0");
  CHECK(prod.alphas.at(3) == Rational(1));
  const PolynomialODE mixed = parse_ode("x'' + x'*x'*x = 0");
  CHECK(mixed.lambdas.at({2, 1}) == Rational(1));
}

TEST_CASE("constants and x^0") {
  CHECK(parse_ode("x'' + 1/2 = 0").alphas.at(0) == Rational(1, 2));
  CHECK(parse_ode("x'' + 2*x^0 = 0").alphas.at(0) == Rational(2));
  CHECK(parse_ode("x'' - 3 = 0").alphas.at(0) == Rational(-3));
}

TEST_CASE("whitespace flexibility") {
  CHECK(parse_ode("x''+x+1/10*x^3=0") ==
        parse_ode("x'' + x + 1/10*x^3 = 0"));
  CHECK(parse_ode("  x''\t+ x =\n0") == parse_ode("x'' + x = 0"));
  // signs live between terms, not inside coefficients
  CHECK_THROWS_AS(parse_ode("x'' + -1*x = 0"), ParseError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_ode("x'' + $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 7);
  }
  try {
    parse_ode("x'' +\n+ x = 0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(parse_ode(""), ParseError);
  CHECK_THROWS_AS(parse_ode("x + x^3 = 0"), ParseError);       // no x''
  CHECK_THROWS_AS(parse_ode("x'' + x'' + x = 0"), ParseError); // two x''
  CHECK_THROWS_AS(parse_ode("x'' * x = 0"), ParseError);       // x'' not alone
  CHECK_THROWS_AS(parse_ode("x''^2 + x = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("0*x'' + x = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + x = 1"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + x"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + x = 0 junk"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + 1/0*x = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + x^-2 = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + x^1.5 = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + 2x = 0"), ParseError);      // missing '*'
  CHECK_THROWS_AS(parse_ode("x'' + 0.1234567890123*x = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + (x)^2 = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("x'' + 1/2/3*x = 0"), ParseError);
  CHECK_THROWS_AS(parse_ode("y'' + x = 0"), ParseError);
}

TEST_CASE("rhs zero forms") {
  CHECK_NOTHROW(parse_ode("x'' + x = 0.0"));
  CHECK_THROWS_AS(parse_ode("x'' + x = 0.5"), ParseError);
}

TEST_CASE("canonical render") {
  CHECK(render_ode(parse_ode("x'' + x = 0")) == "x'' + x = 0");
  CHECK(render_ode(parse_ode("x''+x+1/10*x^3=0")) ==
        "x'' + x + 1/10*x^3 = 0");
  CHECK(render_ode(parse_ode("x'' - 1/2 + 4*x - x^2 + 1/10*(x')^2*x = 0")) ==
        "x'' - 1/2 + 4*x - x^2 + 1/10*(x')^2*x = 0");
  CHECK(render_ode(parse_ode("x'' + x' = 0")) == "x'' + x' = 0");
  CHECK(render_ode(parse_ode("x'' + 3*x'*x = 0")) == "x'' + 3*x'*x = 0");
}

namespace {

// Mirrors the parser's inference so generated equations survive the trip.
Rational inferred_w(const PolynomialODE& ode) {
  auto it = ode.alphas.find(1);
  if (it != ode.alphas.end() && it->second > Rational(0)) {
    if (auto root = it->second.sqrt()) return *root;
  }
  return Rational(1);
}

}  // namespace

TEST_CASE("render/parse round trip on random equations") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  std::uniform_int_distribution<int> alpha_l(0, 5);
  std::uniform_int_distribution<int> lam_k(1, 3);
  std::uniform_int_distribution<int> lam_m(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    PolynomialODE ode;
    const int n_alpha = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int t = 0; t < n_alpha; ++t) {
      const Rational c(num(rng), den(rng));
      if (!c.is_zero()) ode.alphas[alpha_l(rng)] = c;
    }
    const int n_lam = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int t = 0; t < n_lam; ++t) {
      const Rational c(num(rng), den(rng));
      if (!c.is_zero()) ode.lambdas[{lam_k(rng), lam_m(rng)}] = c;
    }
    ode.w = inferred_w(ode);
    const std::string text = render_ode(ode);
    CAPTURE(text);
    const PolynomialODE back = parse_ode(text);
    CHECK(back == ode);
  }
}

TEST_CASE("parser never crashes on arbitrary junk") {
  std::mt19937 rng(4242);
  const std::string alphabet = "x'()^*/+-=0123456789. \tq";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s += alphabet[pick(rng)];
    try {
      (void)parse_ode(s);
    } catch (const ParseError&) {
      // expected for almost every sample
    } catch (const std::overflow_error&) {
      // huge literals are allowed to overflow loudly
    }
  }
}
