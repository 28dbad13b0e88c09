#pragma once

#include <stdexcept>
#include <utility>

#include "nlosc/ladder.hpp"
#include "nlosc/rational.hpp"

namespace nlosc {

// Second-order Rayleigh-Schrodinger energy for one level.
struct PTResult {
  int level = 0;
  double e0 = 0.0;
  double e1 = 0.0;  // identically zero for a diagonal/off-diagonal split
  double e2 = 0.0;
  double total = 0.0;
};

// H0 (number-conserving terms, raise == lower) and H1 (the rest).
// H0 + H1 == op exactly.
std::pair<OperatorPolynomial, OperatorPolynomial> split_diagonal(
    const OperatorPolynomial& op);

// An intermediate state shares the unperturbed energy of the target level
// while coupling to it, so the e2 sum is singular.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// e0 = <n|H0|n>, e1 = <n|H1|n> = 0 by construction, and
// e2 = sum_{m != n} <m|H1|n>^2 / (e0_n - e0_m); the sum is finite because
// H1 couples |n> to at most max_degree distinct neighbours.  basis_cut = 0
// selects the automatic cut n + max_degree + 1 (which covers every coupled
// state); an explicit cut must exceed that and only restricts the scan.
PTResult pt_energy(const OperatorPolynomial& op, int n, int basis_cut = 0);

// Quartic-preset ground-state closed forms at w = 1:
//   e0 = 1/2 + lambda/16,   e2 = -3 lambda^2 / (32 (4 + 5 lambda / 2)).
double closed_form_e0_eq12(const Rational& lambda);
double closed_form_e2_eq12(const Rational& lambda);

}  // namespace nlosc
