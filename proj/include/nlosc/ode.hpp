#pragma once

#include <map>
#include <string>
#include <utility>

#include "nlosc/rational.hpp"

namespace nlosc {

// Polynomial oscillator equation in normalized form
//
//   x'' + sum_l alpha_l x^l + sum_{k>=1,m>=0} lambda_{k,m} (x')^k x^m = 0
//
// with exact rational coefficients and the leading x'' coefficient divided
// out.  Zero coefficients are never stored.  `w` is the harmonic frequency:
// sqrt(alpha_1) when that is an exact rational square, an explicit override,
// or 1 otherwise.
struct PolynomialODE {
  std::map<int, Rational> alphas;                       // l -> alpha_l
  std::map<std::pair<int, int>, Rational> lambdas;      // (k, m) -> lambda
  Rational w = Rational(1);

  friend bool operator==(const PolynomialODE& a, const PolynomialODE& b) {
    return a.alphas == b.alphas && a.lambdas == b.lambdas && a.w == b.w;
  }
};

// Canonical single-line rendering, e.g.
//   "x'' + x + 1/10*x^3 = 0"
//   "x'' + 4*x - 1/2*(x')^2*x^2 = 0"
// Terms appear as x'' first, then alphas by ascending power, then lambda
// terms by ascending (k, m).  Re-parsing the result reproduces the value.
std::string render_ode(const PolynomialODE& ode);

}  // namespace nlosc
