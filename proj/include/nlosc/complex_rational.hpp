#pragma once

#include <complex>
#include <string>

#include "nlosc/rational.hpp"

namespace nlosc {

// Gaussian rational: re + im*i with exact rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(r) {}  // NOLINT: implicit by design
  ComplexRational(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexRational conj() const { return {re, -im}; }

  std::complex<double> to_complex() const {
    return {re.to_double(), im.to_double()};
  }

  ComplexRational operator-() const { return {-re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const ComplexRational& a,
                                   const Rational& s) {
    return {a.re * s, a.im * s};
  }

  ComplexRational& operator+=(const ComplexRational& b) {
    return *this = *this + b;
  }
  ComplexRational& operator-=(const ComplexRational& b) {
    return *this = *this - b;
  }
  ComplexRational& operator*=(const ComplexRational& b) {
    return *this = *this * b;
  }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
    return !(a == b);
  }

  // "3", "-1/2", "i", "-i", "2/3*i", "1/2 + 1/3*i", "1/2 - 1/3*i"
  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string imag;
    if (im == Rational(1)) {
      imag = "i";
    } else if (im == Rational(-1)) {
      imag = "-i";
    } else {
      imag = im.str() + "*i";
    }
    if (re.is_zero()) return imag;
    if (im.is_negative()) {
      std::string mag = (-im == Rational(1)) ? "i" : (-im).str() + "*i";
      return re.str() + " - " + mag;
    }
    return re.str() + " + " + imag;
  }
};

}  // namespace nlosc
