#include "nlosc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

namespace nlosc {

int HamiltonianMatrix::bandwidth() const {
  int band = 0;
  for (int r = 0; r < n_; ++r)
    for (int c = r + band + 1; c < n_; ++c)
      if (at(r, c) != 0.0) band = c - r;
  return band;
}

double HamiltonianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

std::complex<double> matrix_element_complex(const OperatorPolynomial& op,
                                            int m, int n) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("negative basis index in matrix element");
  const double two_w = op.radicand().to_double();
  std::complex<double> sum = 0.0;
  for (const auto& [mono, c] : op.terms()) {
    const int i = mono.raise;
    const int j = mono.lower;
    if (n < j || n - j + i != m) continue;
    // <m| adag^i a^j |n> = sqrt(n!/(n-j)!) sqrt(m!/(m-i)!), built as a
    // product of square roots so large factorials never materialize.
    double amp = 1.0;
    for (int t = 0; t < j; ++t) amp *= std::sqrt(double(n - t));
    for (int t = 0; t < i; ++t) amp *= std::sqrt(double(m - t));
    sum += c.value(two_w) * amp;
  }
  return sum;
}

double matrix_element(const OperatorPolynomial& op, int m, int n) {
  const std::complex<double> z = matrix_element_complex(op, m, n);
  if (std::abs(z.imag()) > 1e-14) {
    std::ostringstream os;
    os << "matrix element <" << m << "|H|" << n
       << "> has imaginary residue " << z.imag()
       << " (operator is not self-adjoint)";
    throw std::invalid_argument(os.str());
  }
  return z.real();
}

HamiltonianMatrix build_matrix(const OperatorPolynomial& op, int n) {
  if (n < 1) throw std::invalid_argument("basis size must be at least 1");
  if (!hermitian_check(op))
    throw std::invalid_argument(
        "build_matrix requires a self-adjoint operator");
  // Distinct super-diagonal offsets the terms can reach.
  std::set<int> offsets;
  for (const auto& [mono, c] : op.terms())
    if (mono.lower >= mono.raise) offsets.insert(mono.lower - mono.raise);
  HamiltonianMatrix h(n);
  for (int row = 0; row < n; ++row) {
    for (int d : offsets) {
      const int col = row + d;
      if (col >= n) break;
      const double v = matrix_element(op, row, col);
      h.at(row, col) = v;
      h.at(col, row) = v;
    }
  }
  return h;
}

Spectrum eigensolve(const HamiltonianMatrix& h, double tol, bool want_vectors,
                    int max_sweeps) {
  const int n = h.size();
  std::vector<double> a(std::size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[std::size_t(r) * n + c] = h.at(r, c);

  std::vector<double> v;
  if (want_vectors) {
    v.assign(std::size_t(n) * n, 0.0);
    for (int r = 0; r < n; ++r) v[std::size_t(r) * n + r] = 1.0;
  }

  auto off_norm = [&]() {
    double s = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) {
        const double x = a[std::size_t(r) * n + c];
        s += 2.0 * x * x;
      }
    return std::sqrt(s);
  };

  const double threshold = tol * h.frobenius_norm();
  double off = off_norm();
  int sweep = 0;
  while (off > threshold && sweep < max_sweeps) {
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[std::size_t(p) * n + q];
        if (apq == 0.0) continue;
        const double app = a[std::size_t(p) * n + p];
        const double aqq = a[std::size_t(q) * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[std::size_t(p) * n + p] = app - t * apq;
        a[std::size_t(q) * n + q] = aqq + t * apq;
        a[std::size_t(p) * n + q] = 0.0;
        a[std::size_t(q) * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[std::size_t(r) * n + p];
          const double arq = a[std::size_t(r) * n + q];
          const double nrp = arp - s * (arq + tau * arp);
          const double nrq = arq + s * (arp - tau * arq);
          a[std::size_t(r) * n + p] = nrp;
          a[std::size_t(p) * n + r] = nrp;
          a[std::size_t(r) * n + q] = nrq;
          a[std::size_t(q) * n + r] = nrq;
        }
        if (want_vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = v[std::size_t(r) * n + p];
            const double vrq = v[std::size_t(r) * n + q];
            v[std::size_t(r) * n + p] = vrp - s * (vrq + tau * vrp);
            v[std::size_t(r) * n + q] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
    off = off_norm();
  }
  if (off > threshold) {
    std::ostringstream os;
    os << "jacobi sweep limit (" << max_sweeps
       << ") reached with off-diagonal norm " << off << " > " << threshold;
    throw SolverError(os.str(), off, sweep);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[std::size_t(x) * n + x] < a[std::size_t(y) * n + y];
  });

  Spectrum spec;
  spec.sweeps = sweep;
  spec.off_norm = off;
  spec.eigenvalues.reserve(n);
  for (int k : order) spec.eigenvalues.push_back(a[std::size_t(k) * n + k]);

  if (want_vectors) {
    spec.eigenvectors.resize(n);
    double worst = 0.0;
    for (int out = 0; out < n; ++out) {
      const int k = order[out];
      std::vector<double>& col = spec.eigenvectors[out];
      col.resize(n);
      for (int r = 0; r < n; ++r) col[r] = v[std::size_t(r) * n + k];
      // Fix the sign: largest-magnitude component positive.
      int top = 0;
      for (int r = 1; r < n; ++r)
        if (std::abs(col[r]) > std::abs(col[top])) top = r;
      if (col[top] < 0.0)
        for (double& x : col) x = -x;
      // Residual ||H col - E col||.
      double rss = 0.0;
      for (int r = 0; r < n; ++r) {
        double hv = 0.0;
        for (int cix = 0; cix < n; ++cix) hv += h.at(r, cix) * col[cix];
        const double d = hv - spec.eigenvalues[out] * col[r];
        rss += d * d;
      }
      worst = std::max(worst, std::sqrt(rss));
    }
    spec.residual_bound = worst;
  }
  return spec;
}

std::vector<std::pair<int, std::vector<double>>> convergence_sweep(
    const OperatorPolynomial& op, const std::vector<int>& sizes, int levels,
    double tol) {
  if (sizes.empty()) throw std::invalid_argument("no basis sizes given");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 1)
      throw std::invalid_argument("basis sizes must be positive");
    if (k > 0 && sizes[k] <= sizes[k - 1])
      throw std::invalid_argument("basis sizes must be strictly ascending");
  }
  if (levels < 1 || levels > sizes.front())
    throw std::invalid_argument(
        "levels must lie between 1 and the smallest basis size");

  std::vector<std::future<std::vector<double>>> jobs;
  jobs.reserve(sizes.size());
  for (int n : sizes) {
    jobs.push_back(std::async(std::launch::async, [&op, n, levels, tol]() {
      const Spectrum s = eigensolve(build_matrix(op, n), tol);
      return std::vector<double>(s.eigenvalues.begin(),
                                 s.eigenvalues.begin() + levels);
    }));
  }
  std::vector<std::pair<int, std::vector<double>>> out;
  out.reserve(sizes.size());
  for (std::size_t k = 0; k < sizes.size(); ++k)
    out.emplace_back(sizes[k], jobs[k].get());
  return out;
}

}  // namespace nlosc
