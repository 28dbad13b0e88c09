#include "nlosc/perturbation.hpp"

#include <cmath>
#include <set>
#include <string>

#include "nlosc/spectral.hpp"

namespace nlosc {

std::pair<OperatorPolynomial, OperatorPolynomial> split_diagonal(
    const OperatorPolynomial& op) {
  OperatorPolynomial h0(op.w());
  OperatorPolynomial h1(op.w());
  for (const auto& [mono, c] : op.terms())
    (mono.raise == mono.lower ? h0 : h1).add_term(mono, c);
  return {std::move(h0), std::move(h1)};
}

PTResult pt_energy(const OperatorPolynomial& op, int n, int basis_cut) {
  if (n < 0) throw std::invalid_argument("negative level index");
  const int max_degree = op.max_degree();
  if (basis_cut == 0) {
    basis_cut = n + max_degree + 1;
  } else if (basis_cut <= n + max_degree) {
    throw std::invalid_argument(
        "basis_cut must exceed level + operator degree (need > " +
        std::to_string(n + max_degree) + ")");
  }

  const auto [h0, h1] = split_diagonal(op);
  PTResult r;
  r.level = n;
  r.e0 = matrix_element(h0, n, n);
  r.e1 = matrix_element(h1, n, n);  // empty diagonal: exactly zero

  // H1 reaches finitely many neighbours |n + d>, one d per monomial offset.
  std::set<int> offsets;
  for (const auto& [mono, c] : h1.terms())
    offsets.insert(mono.raise - mono.lower);
  for (int d : offsets) {
    const int m = n + d;
    if (m < 0 || m == n || m >= basis_cut) continue;
    const double t = matrix_element(h1, m, n);
    if (t == 0.0) continue;
    const double e0m = matrix_element(h0, m, m);
    const double denom = r.e0 - e0m;
    if (std::abs(denom) < 1e-12 * (1.0 + std::abs(r.e0) + std::abs(e0m)))
      throw DegenerateError("level " + std::to_string(n) +
                            " is degenerate with coupled state |" +
                            std::to_string(m) + ">");
    r.e2 += t * t / denom;
  }
  r.total = r.e0 + r.e1 + r.e2;
  return r;
}

double closed_form_e0_eq12(const Rational& lambda) {
  return (Rational(1, 2) + lambda / Rational(16)).to_double();
}

double closed_form_e2_eq12(const Rational& lambda) {
  // -3 lambda^2 / (32 (4 + 5 lambda / 2)), evaluated exactly then rounded.
  const Rational num = Rational(-3) * lambda * lambda;
  const Rational den =
      Rational(32) * (Rational(4) + lambda * Rational(5, 2));
  return (num / den).to_double();
}

}  // namespace nlosc
