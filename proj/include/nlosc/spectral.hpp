#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlosc/ladder.hpp"

namespace nlosc {

// Dense symmetric matrix of an operator on the truncated number basis
// |0..N-1>.  Row-major storage; `bandwidth` is the largest |row - col| with
// a nonzero entry.
class HamiltonianMatrix {
 public:
  explicit HamiltonianMatrix(int n) : n_(n), data_(std::size_t(n) * n, 0.0) {}

  int size() const { return n_; }
  double& at(int row, int col) { return data_[std::size_t(row) * n_ + col]; }
  double at(int row, int col) const {
    return data_[std::size_t(row) * n_ + col];
  }

  int bandwidth() const;
  double frobenius_norm() const;

 private:
  int n_;
  std::vector<double> data_;
};

// <m| op |n> summed term by term; each adag^i a^j needs m = n - j + i and
// contributes coeff * sqrt(n!/(n-j)!) * sqrt(m!/(m-i)!), with the factorial
// ratios accumulated as products of square roots so nothing overflows.
std::complex<double> matrix_element_complex(const OperatorPolynomial& op,
                                            int m, int n);

// Real part of the above; throws std::invalid_argument when the imaginary
// residue exceeds 1e-14.
double matrix_element(const OperatorPolynomial& op, int m, int n);

// Builds the N x N matrix (upper triangle computed, mirrored by symmetry).
// Requires hermitian_check(op); throws std::invalid_argument otherwise.
HamiltonianMatrix build_matrix(const OperatorPolynomial& op, int n);

// Eigen-decomposition did not reach the requested tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double off_norm, int sweeps)
      : std::runtime_error(what), off_norm_(off_norm), sweeps_(sweeps) {}
  double off_norm() const { return off_norm_; }
  int sweeps() const { return sweeps_; }

 private:
  double off_norm_;
  int sweeps_;
};

struct Spectrum {
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // column per eigenvalue
  int sweeps = 0;
  double off_norm = 0.0;        // final off-diagonal Frobenius norm
  double residual_bound = 0.0;  // max_k ||H v_k - E_k v_k||_2 (with vectors)
};

// Cyclic Jacobi diagonalization.  Sweeps until the off-diagonal Frobenius
// norm drops below tol * ||H||_F; throws SolverError after max_sweeps.
// Eigenvalues ascend; eigenvectors (when requested) are unit length with
// the largest-magnitude component positive.
Spectrum eigensolve(const HamiltonianMatrix& h, double tol = 1e-12,
                    bool want_vectors = false, int max_sweeps = 100);

// Lowest `levels` eigenvalues at each basis size, computed concurrently.
// `sizes` must be strictly ascending with levels <= sizes.front().
std::vector<std::pair<int, std::vector<double>>> convergence_sweep(
    const OperatorPolynomial& op, const std::vector<int>& sizes, int levels,
    double tol = 1e-12);

}  // namespace nlosc
