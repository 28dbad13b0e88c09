#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nlosc/complex_rational.hpp"
#include "nlosc/rational.hpp"

namespace nlosc {

// Normal-ordered monomial adag^raise a^lower.
struct LadderMonomial {
  int raise = 0;  // power of the raising operator adag
  int lower = 0;  // power of the lowering operator a

  int degree() const { return raise + lower; }

  friend bool operator==(const LadderMonomial& a, const LadderMonomial& b) {
    return a.raise == b.raise && a.lower == b.lower;
  }
};

// Canonical term order: total degree, then raising power.
struct MonomialOrder {
  bool operator()(const LadderMonomial& a, const LadderMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raise < b.raise;
  }
};

// Coefficient in the ring Q(i)[sqrt(2w)]: plain + root*sqrt(2w) with exact
// Gaussian-rational slots.  Quantizing x and p introduces powers of
// (2w)^(1/2); a monomial adag^i a^j only ever receives half-powers of the
// same parity as i+j, so one radical slot is closed under ring operations
// (root*root folds back into plain via the exact factor 2w).
struct Coeff {
  ComplexRational plain;
  ComplexRational root;

  Coeff() = default;
  Coeff(ComplexRational p) : plain(p) {}  // NOLINT: implicit by design
  Coeff(ComplexRational p, ComplexRational r) : plain(p), root(r) {}

  static Coeff one() { return Coeff(ComplexRational(Rational(1))); }

  bool is_zero() const { return plain.is_zero() && root.is_zero(); }
  Coeff conj() const { return {plain.conj(), root.conj()}; }
  Coeff operator-() const { return {-plain, -root}; }

  friend Coeff operator+(const Coeff& a, const Coeff& b) {
    return {a.plain + b.plain, a.root + b.root};
  }
  friend Coeff operator-(const Coeff& a, const Coeff& b) {
    return {a.plain - b.plain, a.root - b.root};
  }
  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.plain == b.plain && a.root == b.root;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  // Product needs the exact radicand u = 2w to fold root*root into plain.
  static Coeff mul(const Coeff& a, const Coeff& b, const Rational& u) {
    return {a.plain * b.plain + (a.root * b.root) * u,
            a.plain * b.root + a.root * b.plain};
  }

  std::complex<double> value(double two_w) const;
  std::string str() const;
};

// Elementary ladder factor for building operator words.
enum class LadderFactor { Lower, Raise };  // a, adag

// Finite sum of normal-ordered ladder monomials with Coeff coefficients,
// tied to one harmonic frequency w (the radicand of the coefficient ring is
// u = 2w).  Zero coefficients are dropped eagerly; iteration follows the
// canonical (degree, raise) order.
class OperatorPolynomial {
 public:
  using TermMap = std::map<LadderMonomial, Coeff, MonomialOrder>;

  explicit OperatorPolynomial(Rational w = Rational(1));

  static OperatorPolynomial identity(Rational w = Rational(1));

  const Rational& w() const { return w_; }
  Rational radicand() const { return Rational(2) * w_; }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  // Zero when absent.
  Coeff coeff(int raise, int lower) const;

  // Folds into any existing term; removes the entry if the sum vanishes.
  void add_term(const LadderMonomial& mono, const Coeff& c);

  OperatorPolynomial& operator+=(const OperatorPolynomial& other);
  OperatorPolynomial& operator-=(const OperatorPolynomial& other);
  friend OperatorPolynomial operator+(OperatorPolynomial a,
                                      const OperatorPolynomial& b) {
    return a += b;
  }
  friend OperatorPolynomial operator-(OperatorPolynomial a,
                                      const OperatorPolynomial& b) {
    return a -= b;
  }

  void scale(const Coeff& c);
  void scale(const Rational& r) { scale(Coeff(ComplexRational(r))); }

  friend bool operator==(const OperatorPolynomial& a,
                         const OperatorPolynomial& b) {
    return a.w_ == b.w_ && a.terms_ == b.terms_;
  }

 private:
  Rational w_;
  TermMap terms_;
};

// Exact product; both factors must share w.  Uses the contraction identity
//   a^j adag^i = sum_s s! C(i,s) C(j,s) adag^(i-s) a^(j-s)
// so the result is normal ordered.
OperatorPolynomial multiply(const OperatorPolynomial& a,
                            const OperatorPolynomial& b);

// Normal-orders scalar * (product of elementary factors, left to right).
OperatorPolynomial normal_order(std::span<const LadderFactor> word,
                                const Coeff& scalar = Coeff::one(),
                                Rational w = Rational(1));

// x^power with x = (2w)^(-1/2) (a + adag); power 0 gives the identity.
OperatorPolynomial quantize_position(int power, const Rational& w);

// p^power with p = i (w/2)^(1/2) (adag - a).
OperatorPolynomial quantize_momentum(int power, const Rational& w);

// Exact self-adjointness: coeff(i, j) == conj(coeff(j, i)) for all terms.
bool hermitian_check(const OperatorPolynomial& op);

// One term per line in canonical order, e.g.
//   81/160
//   41/40 * adag^1 a^1
//   -1/160 * adag^4
std::string render(const OperatorPolynomial& op);

}  // namespace nlosc
