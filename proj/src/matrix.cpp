#include "spindeg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spindeg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          std::string("dimension mismatch in ") + op);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, "negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  require(rows_ == cols_, "trace of non-square matrix");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require(lhs.cols() == rhs.rows(), "dimension mismatch in matrix product");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int k = 0; k < lhs.cols(); ++k) {
      const Complex v = lhs(i, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < rhs.cols(); ++j) out(i, j) += v * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s, 0.0); }

double max_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& z : m.data()) best = std::max(best, std::abs(z));
  return best;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_norm(m));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale) return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(!a.empty() && !b.empty(), "kron of empty matrix");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex v = a(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem which) {
  require(dim_a > 0 && dim_b > 0, "partial_trace: factor dimensions must be positive");
  require(m.rows() == m.cols() && m.rows() == dim_a * dim_b,
          "partial_trace: matrix is not (dim_a*dim_b) square");
  if (which == Subsystem::b) {
    ComplexMatrix out(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i)
    for (int j = 0; j < dim_b; ++j)
      for (int k = 0; k < dim_a; ++k) out(i, j) += m(k * dim_b + i, k * dim_b + j);
  return out;
}

HermitianEig herm_eig(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), "herm_eig: matrix not square");
  require(m.rows() > 0, "herm_eig: empty matrix");
  require(is_hermitian(m, 1e-12), "herm_eig: matrix not Hermitian within 1e-12");
  for (const Complex& z : m.data())
    require(std::isfinite(z.real()) && std::isfinite(z.imag()),
            "herm_eig: non-finite entry");

  const int n = m.rows();
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double norm = a.frobenius_norm();
  const double stop = 1e-14 * norm;

  auto off_norm = [&a, n]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
  };

  if (norm > 0.0) {
    const int max_sweeps = 100;
    int sweep = 0;
    while (off_norm() > stop) {
      if (++sweep > max_sweeps)
        throw std::runtime_error("herm_eig: Jacobi iteration failed to converge");
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          const double abs_apq = std::abs(apq);
          if (abs_apq <= 1e-300) continue;
          // Unitary 2x2 rotation [[c, s*phase],[-s*conj(phase), c]] zeroing a(p,q).
          const Complex phase = apq / abs_apq;
          const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const Complex sp = s * phase;
          const Complex spc = s * std::conj(phase);
          for (int i = 0; i < n; ++i) {  // right multiply columns p,q
            const Complex aip = a(i, p), aiq = a(i, q);
            a(i, p) = c * aip - spc * aiq;
            a(i, q) = sp * aip + c * aiq;
            const Complex vip = v(i, p), viq = v(i, q);
            v(i, p) = c * vip - spc * viq;
            v(i, q) = sp * vip + c * viq;
          }
          for (int j = 0; j < n; ++j) {  // left multiply rows p,q
            const Complex apj = a(p, j), aqj = a(q, j);
            a(p, j) = c * apj - sp * aqj;
            a(q, j) = spc * apj + c * aqj;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), "trace_norm: matrix not square");
  if (is_hermitian(m, 1e-12)) {
    const HermitianEig e = herm_eig(m);
    double s = 0.0;
    for (double lam : e.eigenvalues) s += std::abs(lam);
    return s;
  }
  const HermitianEig e = herm_eig(m.adjoint() * m);
  double s = 0.0;
  for (double lam : e.eigenvalues) s += std::sqrt(std::max(lam, 0.0));
  return s;
}

ComplexMatrix mat_exp_skew_hermitian(const ComplexMatrix& h, double t) {
  const HermitianEig e = herm_eig(h);
  const int n = h.rows();
  ComplexMatrix scaled(n, n);  // columns of V times exp(-i t lambda)
  for (int k = 0; k < n; ++k) {
    const Complex f = std::exp(Complex(0.0, -t * e.eigenvalues[k]));
    for (int i = 0; i < n; ++i) scaled(i, k) = e.eigenvectors(i, k) * f;
  }
  return scaled * e.eigenvectors.adjoint();
}

}  // namespace spindeg
