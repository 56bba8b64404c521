#include "spindeg/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "spindeg/rng.hpp"

namespace spindeg {

namespace {

// Round 2j to the lattice and reject anything that is not a positive
// half-integer (or would exceed the supported dimension).
int validated_two_j(double j) {
  const double two_j = 2.0 * j;
  const double rounded = std::round(two_j);
  if (!(rounded >= 1.0) || std::abs(two_j - rounded) > 1e-9)
    throw std::invalid_argument("spin quantum number must be a positive half-integer");
  if (rounded + 1.0 > 64.0)
    throw std::invalid_argument("spin dimension 2j+1 exceeds the supported maximum of 64");
  return static_cast<int>(rounded);
}

}  // namespace

SpinSystem make_spin(double j) {
  const int two_j = validated_two_j(j);
  const int d = two_j + 1;
  SpinSystem s;
  s.j = 0.5 * two_j;
  s.d = d;
  s.j1 = ComplexMatrix(d, d);
  s.j2 = ComplexMatrix(d, d);
  s.j3 = ComplexMatrix(d, d);
  // <j,l| J1 |j,m> = (delta_{l,m+1} + delta_{l,m-1}) alpha/2,
  // <j,l| J2 |j,m> = i (delta_{l,m-1} - delta_{l,m+1}) alpha/2,
  // alpha = sqrt(j(j+1) - l m), rows indexed by descending m (row r <-> m = j - r).
  const double jj = s.j * (s.j + 1.0);
  for (int r = 0; r < d; ++r) {
    const double m = s.j - r;
    s.j3(r, r) = m;
    if (r > 0) {  // l = m + 1 sits one row up
      const double alpha = std::sqrt(jj - (m + 1.0) * m);
      s.j1(r - 1, r) = 0.5 * alpha;
      s.j2(r - 1, r) = Complex(0.0, -0.5 * alpha);
    }
    if (r + 1 < d) {  // l = m - 1 sits one row down
      const double alpha = std::sqrt(jj - (m - 1.0) * m);
      s.j1(r + 1, r) = 0.5 * alpha;
      s.j2(r + 1, r) = Complex(0.0, 0.5 * alpha);
    }
  }
  return s;
}

LadderOps ladder_ops(double j) {
  const int two_j = validated_two_j(j);
  const int d = two_j + 1;
  const double jv = 0.5 * two_j;
  LadderOps ops;
  ops.plus = ComplexMatrix(d, d);
  ops.minus = ComplexMatrix(d, d);
  for (int r = 0; r < d; ++r) {
    const double m = jv - r;
    if (r > 0) ops.plus(r - 1, r) = std::sqrt((jv - m) * (jv + m + 1.0));
    if (r + 1 < d) ops.minus(r + 1, r) = std::sqrt((jv + m) * (jv - m + 1.0));
  }
  return ops;
}

ComplexMatrix conjugation_sum(const SpinSystem& s, const ComplexMatrix& a) {
  if (a.rows() != s.d || a.cols() != s.d)
    throw std::invalid_argument("conjugation_sum: operator dimension does not match the spin system");
  return s.j1 * a * s.j1 + s.j2 * a * s.j2 + s.j3 * a * s.j3;
}

ComplexMatrix singlet_state(double j) {
  const int two_j = validated_two_j(j);
  const int d = two_j + 1;
  ComplexMatrix psi(d * d, 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) {
    // |j,m> at row r pairs with |j,-m> at row d-1-r; the phase (-1)^(j-m) is (-1)^r.
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    psi(r * d + (d - 1 - r), 0) = sign * amp;
  }
  return psi;
}

ComplexMatrix random_su2_unitary(const SpinSystem& s, std::uint64_t seed) {
  Rng rng(seed);
  const double two_pi = 6.283185307179586476925286766559;
  const double theta = two_pi * rng.uniform();
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = two_pi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  ComplexMatrix gen = r * std::cos(phi) * s.j1;
  gen += r * std::sin(phi) * s.j2;
  gen += z * s.j3;
  return mat_exp_skew_hermitian(gen, theta);
}

}  // namespace spindeg
