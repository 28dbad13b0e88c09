#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nlosc/ladder.hpp"
#include "nlosc/ode.hpp"

namespace nlosc {

// Operator-ordering rule for mixed p^k x^m products.
enum class Ordering {
  Sym2,      // (p^k x^m + x^m p^k) / 2
  WeylFull,  // average over all distinct interleavings of k p's and m x's
};

// Classical Hamiltonian as a sum of c * x^x_power * p^p_power terms with
// exact rational coefficients.
struct PhaseTerm {
  Rational coeff;
  int x_power = 0;
  int p_power = 0;
};

class PhaseSpacePolynomial {
 public:
  void add_term(const Rational& c, int x_power, int p_power);
  const std::vector<PhaseTerm>& terms() const { return terms_; }

 private:
  std::vector<PhaseTerm> terms_;  // sorted by (x_power, p_power), no zeros
};

// Ordering produced a non-self-adjoint operator (odd velocity powers do
// this for every symmetric ordering of (x')^k x^m forces).
class NonHermitianError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Potential-plus-couplings part of H:
//   sum_l alpha_l x^(l+1)/(l+1)  +  sum_{k,m} lambda_{k,m} p^k x^(m+1)/(m+1)
// (velocities already traded for momenta).
PhaseSpacePolynomial build_potential(const PolynomialODE& ode);

// Quantizes a phase-space polynomial under the given ordering.  Terms with
// odd p-power are rejected with NonHermitianError unless
// allow_non_hermitian is set; the bypassed result carries complex matrix
// elements in the number basis and is only suitable for inspection.
OperatorPolynomial apply_ordering(const PhaseSpacePolynomial& poly,
                                  const Rational& w, Ordering ordering,
                                  bool allow_non_hermitian = false);

// Full pipeline: p^2/2 + quantized potential, normal ordered, exact.
OperatorPolynomial build_hamiltonian(const PolynomialODE& ode,
                                     Ordering ordering,
                                     bool allow_non_hermitian = false);

// Built-in quartic and velocity-coupled oscillators with exact printed-form
// coefficients (see README for the term tables).
enum class Preset { Quartic, VelocityCoupled };

// Parses "eq12" / "eq13".
Preset preset_from_name(const std::string& name);

// eq12: H = w/2 + lambda/16 + (w + lambda/4) adag a + (lambda/8) adag^2 a^2
//           - (lambda/16)(adag^4 + a^4)
// eq13 (requires w == 1):
//       H = 1/2 + lambda/4 + (1 + lambda) adag a + (lambda/2) adag^2 a^2
//           + (lambda/4)(adag^3 a + adag a^3) + (3 lambda/8)(adag^2 + a^2)
OperatorPolynomial preset_hamiltonian(Preset which, const Rational& lambda,
                                      const Rational& w);

}  // namespace nlosc
