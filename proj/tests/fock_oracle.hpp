#pragma once

// Test-side oracle: dense complex matrices of ladder words on a truncated
// number basis, built directly from the elementary matrices of a and adag.
// This is an independent computation path against which the symbolic
// normal-ordering results are checked.  Truncation is exact only away from
// the top of the basis: an entry <m|W|n> of a length-L word is trustworthy
// when max(m, n) <= dim - 1 - L.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "nlosc/ladder.hpp"

namespace oracle {

using CMat = std::vector<std::vector<std::complex<double>>>;

inline CMat zeros(int dim) {
  return CMat(dim, std::vector<std::complex<double>>(dim, 0.0));
}

inline CMat identity(int dim) {
  CMat m = zeros(dim);
  for (int i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

// <n-1| a |n> = sqrt(n)
inline CMat lowering(int dim) {
  CMat m = zeros(dim);
  for (int n = 1; n < dim; ++n) m[n - 1][n] = std::sqrt(double(n));
  return m;
}

// <n+1| adag |n> = sqrt(n+1)
inline CMat raising(int dim) {
  CMat m = zeros(dim);
  for (int n = 0; n + 1 < dim; ++n) m[n + 1][n] = std::sqrt(double(n + 1));
  return m;
}

inline CMat mul(const CMat& a, const CMat& b) {
  const int dim = static_cast<int>(a.size());
  CMat out = zeros(dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const std::complex<double> aik = a[i][k];
      if (aik == std::complex<double>(0.0)) continue;
      for (int j = 0; j < dim; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

inline CMat add(const CMat& a, const CMat& b) {
  CMat out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i][j] += b[i][j];
  return out;
}

inline CMat scale(const CMat& a, std::complex<double> s) {
  CMat out = a;
  for (auto& row : out)
    for (auto& v : row) v *= s;
  return out;
}

// Product of elementary factors in left-to-right operator order.
inline CMat word_matrix(std::span<const nlosc::LadderFactor> word, int dim) {
  CMat out = identity(dim);
  for (nlosc::LadderFactor f : word)
    out = mul(out, f == nlosc::LadderFactor::Raise ? raising(dim)
                                                   : lowering(dim));
  return out;
}

// x = (2w)^(-1/2) (a + adag) as a dense matrix.
inline CMat position(int dim, double w) {
  return scale(add(lowering(dim), raising(dim)), 1.0 / std::sqrt(2.0 * w));
}

// p = i (w/2)^(1/2) (adag - a).
inline CMat momentum(int dim, double w) {
  const std::complex<double> c(0.0, std::sqrt(w / 2.0));
  return add(scale(raising(dim), c), scale(lowering(dim), -c));
}

inline CMat power(const CMat& base, int k) {
  CMat out = identity(static_cast<int>(base.size()));
  for (int i = 0; i < k; ++i) out = mul(out, base);
  return out;
}

}  // namespace oracle
