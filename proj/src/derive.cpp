#include "nlosc/derive.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlosc {

void PhaseSpacePolynomial::add_term(const Rational& c, int x_power,
                                    int p_power) {
  if (c.is_zero()) return;
  if (x_power < 0 || p_power < 0)
    throw std::invalid_argument("negative phase-space power");
  auto key_less = [](const PhaseTerm& t, std::pair<int, int> key) {
    return std::pair(t.x_power, t.p_power) < key;
  };
  auto it = std::lower_bound(terms_.begin(), terms_.end(),
                             std::pair(x_power, p_power), key_less);
  if (it != terms_.end() && it->x_power == x_power && it->p_power == p_power) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, PhaseTerm{c, x_power, p_power});
  }
}

PhaseSpacePolynomial build_potential(const PolynomialODE& ode) {
  PhaseSpacePolynomial v;
  // A restoring force alpha_l x^l integrates to alpha_l x^(l+1)/(l+1); a
  // velocity coupling lambda (x')^k x^m becomes lambda p^k x^(m+1)/(m+1).
  for (const auto& [l, alpha] : ode.alphas)
    v.add_term(alpha / Rational(l + 1), l + 1, 0);
  for (const auto& [km, lambda] : ode.lambdas)
    v.add_term(lambda / Rational(km.second + 1), km.second + 1, km.first);
  return v;
}

namespace {

// Average over all distinct interleavings of p_power momentum factors and
// x_power position factors (the fully symmetric ordering).
OperatorPolynomial weyl_average(int x_power, int p_power, const Rational& w) {
  const OperatorPolynomial x1 = quantize_position(1, w);
  const OperatorPolynomial p1 = quantize_momentum(1, w);
  // 0 = momentum slot, 1 = position slot; start from the sorted pattern.
  std::vector<int> pattern(p_power, 0);
  pattern.insert(pattern.end(), x_power, 1);
  OperatorPolynomial sum(w);
  std::int64_t count = 0;
  do {
    OperatorPolynomial prod = OperatorPolynomial::identity(w);
    for (int slot : pattern) prod = multiply(prod, slot == 0 ? p1 : x1);
    sum += prod;
    ++count;
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  sum.scale(Rational(1, count));
  return sum;
}

}  // namespace

OperatorPolynomial apply_ordering(const PhaseSpacePolynomial& poly,
                                  const Rational& w, Ordering ordering,
                                  bool allow_non_hermitian) {
  OperatorPolynomial out(w);
  for (const PhaseTerm& t : poly.terms()) {
    if (t.p_power % 2 != 0 && !allow_non_hermitian)
      throw NonHermitianError(
          "term x^" + std::to_string(t.x_power) + " p^" +
          std::to_string(t.p_power) +
          " has odd momentum power; every symmetric ordering of it is "
          "non-self-adjoint (rerun with allow_non_hermitian to inspect)");

    OperatorPolynomial ordered(w);
    if (t.x_power == 0 || t.p_power == 0) {
      ordered = multiply(quantize_momentum(t.p_power, w),
                         quantize_position(t.x_power, w));
    } else if (ordering == Ordering::Sym2) {
      const OperatorPolynomial xq = quantize_position(t.x_power, w);
      const OperatorPolynomial pq = quantize_momentum(t.p_power, w);
      ordered = multiply(pq, xq);
      ordered += multiply(xq, pq);
      ordered.scale(Rational(1, 2));
    } else {
      ordered = weyl_average(t.x_power, t.p_power, w);
    }
    ordered.scale(t.coeff);
    out += ordered;
  }
  return out;
}

OperatorPolynomial build_hamiltonian(const PolynomialODE& ode,
                                     Ordering ordering,
                                     bool allow_non_hermitian) {
  OperatorPolynomial h = quantize_momentum(2, ode.w);
  h.scale(Rational(1, 2));
  h += apply_ordering(build_potential(ode), ode.w, ordering,
                      allow_non_hermitian);
  return h;
}

Preset preset_from_name(const std::string& name) {
  if (name == "eq12") return Preset::Quartic;
  if (name == "eq13") return Preset::VelocityCoupled;
  throw std::invalid_argument("unknown preset '" + name +
                              "' (expected eq12 or eq13)");
}

OperatorPolynomial preset_hamiltonian(Preset which, const Rational& lambda,
                                      const Rational& w) {
  if (!(w > Rational(0)))
    throw std::invalid_argument("harmonic frequency w must be positive");
  OperatorPolynomial h(w);
  auto add = [&h](int raise, int lower, const Rational& c) {
    h.add_term({raise, lower}, Coeff(ComplexRational(c)));
  };
  switch (which) {
    case Preset::Quartic:
      add(0, 0, w / Rational(2) + lambda / Rational(16));
      add(1, 1, w + lambda / Rational(4));
      add(2, 2, lambda / Rational(8));
      add(4, 0, -(lambda / Rational(16)));
      add(0, 4, -(lambda / Rational(16)));
      break;
    case Preset::VelocityCoupled:
      if (w != Rational(1))
        throw std::invalid_argument(
            "the eq13 preset is defined at w = 1 only");
      add(0, 0, Rational(1, 2) + lambda / Rational(4));
      add(1, 1, Rational(1) + lambda);
      add(2, 2, lambda / Rational(2));
      add(3, 1, lambda / Rational(4));
      add(1, 3, lambda / Rational(4));
      add(2, 0, lambda * Rational(3, 8));
      add(0, 2, lambda * Rational(3, 8));
      break;
  }
  return h;
}

}  // namespace nlosc
