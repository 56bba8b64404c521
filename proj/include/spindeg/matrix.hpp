#pragma once

#include <complex>
#include <vector>

namespace spindeg {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Dimensions fixed at construction, entries
// default to zero. All dimensions in this library stay <= 64 on a side for
// operator algebra and a few hundred inside the SDP, so no effort is spent
// on blocking or expression templates.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

// Largest entry modulus. Zero for an empty matrix.
double max_norm(const ComplexMatrix& m);

// max_norm(m - m^dag) <= tol * max(1, max_norm(m)).
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

// Kronecker product, row-major index convention (a x b)[(i*br+k), (j*bc+l)].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { a, b };

// Partial trace of a (dim_a*dim_b) square matrix over the named factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem which);

// Sum of singular values. Hermitian input (within 1e-12 relative) goes through
// the eigensolver as sum |lambda_i|; anything else through eig(m^dag m).
double trace_norm(const ComplexMatrix& m);

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. The input is checked
// Hermitian within 1e-12 (relative to its max entry) and symmetrized to
// (m + m^dag)/2 before iterating; sweeps stop once the off-diagonal Frobenius
// mass drops below 1e-14 * ||m||_F.
HermitianEig herm_eig(const ComplexMatrix& m);

// exp(-i t h) for Hermitian h, via the eigendecomposition. Result is unitary.
ComplexMatrix mat_exp_skew_hermitian(const ComplexMatrix& h, double t);

}  // namespace spindeg
