#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nlosc/ode.hpp"

namespace nlosc {

// Syntax or semantic failure in the equation text, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Parses an oscillator equation such as
//
//   x'' + x + 1/10*x^3 = 0
//   x'' + x + 0.1*(x')^2*x = 0
//
// Accepted terms: an optional rational or decimal coefficient times a
// product of x'' (alone in its term), x' powers, and x powers; the right
// hand side must be literally 0.  Exactly one x'' term is required; every
// coefficient is divided by its coefficient so the stored form is monic.
// Repeated monomials are summed and exact zero sums are dropped.  Decimal
// coefficients convert exactly (up to 12 fractional digits).
//
// `w_override`, when given, fixes the harmonic frequency; otherwise w is
// sqrt(alpha_1) when alpha_1 is a perfect rational square, else 1.
PolynomialODE parse_ode(std::string_view source,
                        std::optional<Rational> w_override = std::nullopt);

}  // namespace nlosc
