#include "nlosc/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nlosc {

namespace {

Coeff scale_coeff(const Coeff& c, const Rational& r) {
  return {c.plain * r, c.root * r};
}

void require_same_w(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  if (a.w() != b.w())
    throw std::invalid_argument(
        "operator frequency mismatch: w = " + a.w().str() + " vs " +
        b.w().str());
}

}  // namespace

std::complex<double> Coeff::value(double two_w) const {
  return plain.to_complex() + root.to_complex() * std::sqrt(two_w);
}

std::string Coeff::str() const {
  if (root.is_zero()) return plain.str();
  std::string rs = root.str();
  if (rs.find(' ') != std::string::npos) rs = "(" + rs + ")";
  rs += "*sqrt(2w)";
  if (plain.is_zero()) return rs;
  return plain.str() + " + " + rs;
}

OperatorPolynomial::OperatorPolynomial(Rational w) : w_(w) {}

OperatorPolynomial OperatorPolynomial::identity(Rational w) {
  OperatorPolynomial p(w);
  p.add_term({0, 0}, Coeff::one());
  return p;
}

int OperatorPolynomial::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Coeff OperatorPolynomial::coeff(int raise, int lower) const {
  auto it = terms_.find({raise, lower});
  return it == terms_.end() ? Coeff() : it->second;
}

void OperatorPolynomial::add_term(const LadderMonomial& mono, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPolynomial& OperatorPolynomial::operator+=(
    const OperatorPolynomial& other) {
  require_same_w(*this, other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(
    const OperatorPolynomial& other) {
  require_same_w(*this, other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

void OperatorPolynomial::scale(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  const Rational u = radicand();
  TermMap scaled;
  for (const auto& [mono, k] : terms_) {
    Coeff p = Coeff::mul(k, c, u);
    if (!p.is_zero()) scaled.emplace(mono, p);
  }
  terms_ = std::move(scaled);
}

OperatorPolynomial multiply(const OperatorPolynomial& a,
                            const OperatorPolynomial& b) {
  require_same_w(a, b);
  const Rational u = a.radicand();
  OperatorPolynomial out(a.w());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Coeff c = Coeff::mul(ca, cb, u);
      // a^j adag^i = sum_s s! C(i,s) C(j,s) adag^(i-s) a^(j-s), contracting
      // the inner a^(ma.lower) against adag^(mb.raise).
      const int j = ma.lower;
      const int i = mb.raise;
      Rational factor(1);
      for (int s = 0; s <= std::min(i, j); ++s) {
        if (s > 0)
          factor = factor * Rational((i - s + 1) * std::int64_t(j - s + 1), s);
        out.add_term({ma.raise + i - s, j - s + mb.lower},
                     scale_coeff(c, factor));
      }
    }
  }
  return out;
}

OperatorPolynomial normal_order(std::span<const LadderFactor> word,
                                const Coeff& scalar, Rational w) {
  OperatorPolynomial out = OperatorPolynomial::identity(w);
  out.scale(scalar);
  for (LadderFactor f : word) {
    OperatorPolynomial elem(w);
    elem.add_term(f == LadderFactor::Raise ? LadderMonomial{1, 0}
                                           : LadderMonomial{0, 1},
                  Coeff::one());
    out = multiply(out, elem);
  }
  return out;
}

namespace {

OperatorPolynomial power_of(const OperatorPolynomial& base, int power,
                            const Rational& w) {
  OperatorPolynomial out = OperatorPolynomial::identity(w);
  for (int k = 0; k < power; ++k) out = multiply(out, base);
  return out;
}

void require_positive_w(const Rational& w) {
  if (!(w > Rational(0)))
    throw std::invalid_argument("harmonic frequency w must be positive, got " +
                                w.str());
}

}  // namespace

OperatorPolynomial quantize_position(int power, const Rational& w) {
  if (power < 0) throw std::invalid_argument("negative operator power");
  require_positive_w(w);
  const Rational u = Rational(2) * w;
  OperatorPolynomial x1(w);
  // (2w)^(-1/2) = (1/(2w)) sqrt(2w)
  const Coeff c{ComplexRational(), ComplexRational(Rational(1) / u)};
  x1.add_term({1, 0}, c);
  x1.add_term({0, 1}, c);
  return power_of(x1, power, w);
}

OperatorPolynomial quantize_momentum(int power, const Rational& w) {
  if (power < 0) throw std::invalid_argument("negative operator power");
  require_positive_w(w);
  OperatorPolynomial p1(w);
  // i (w/2)^(1/2) = (i/2) sqrt(2w)
  p1.add_term({1, 0},
              Coeff{ComplexRational(), {Rational(0), Rational(1, 2)}});
  p1.add_term({0, 1},
              Coeff{ComplexRational(), {Rational(0), Rational(-1, 2)}});
  return power_of(p1, power, w);
}

bool hermitian_check(const OperatorPolynomial& op) {
  for (const auto& [mono, c] : op.terms()) {
    if (op.coeff(mono.lower, mono.raise) != c.conj()) return false;
  }
  return true;
}

std::string render(const OperatorPolynomial& op) {
  if (op.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [mono, c] : op.terms()) {
    std::string cs = c.str();
    if (mono.degree() == 0) {
      os << cs << "\n";
      continue;
    }
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    os << cs << " *";
    if (mono.raise > 0) os << " adag^" << mono.raise;
    if (mono.lower > 0) os << " a^" << mono.lower;
    os << "\n";
  }
  return os.str();
}

}  // namespace nlosc
