#pragma once

#include <cstdint>

#include "spindeg/matrix.hpp"

namespace spindeg {

// Irreducible su(2) generators for one spin-j system. Basis rows are ordered
// by descending magnetic number, row 0 <-> m = j, so j3 = diag(j, j-1, ..., -j).
struct SpinSystem {
  double j = 0.0;
  int d = 0;  // 2j + 1
  ComplexMatrix j1, j2, j3;
};

// j must be a positive half-integer with 2j+1 <= 64.
SpinSystem make_spin(double j);

struct LadderOps {
  ComplexMatrix plus;   // J+ |j,m> = sqrt((j-m)(j+m+1)) |j,m+1>
  ComplexMatrix minus;  // J- |j,m> = sqrt((j+m)(j-m+1)) |j,m-1>
};

// Built directly from the ladder action, independent of make_spin's route.
LadderOps ladder_ops(double j);

// sum_k J_k a J_k over k = 1,2,3.
ComplexMatrix conjugation_sum(const SpinSystem& s, const ComplexMatrix& a);

// Two-spin singlet-type maximally entangled vector on C^d (x) C^d:
// d^{-1/2} sum_m (-1)^(j-m) |j,m> (x) |j,-m>, returned as a d^2 x 1 column.
ComplexMatrix singlet_state(double j);

// U = exp(-i theta n.J) with theta uniform on [0, 2pi) and n uniform on the
// sphere, drawn from the seeded Rng stream (see rng.hpp for determinism).
ComplexMatrix random_su2_unitary(const SpinSystem& s, std::uint64_t seed);

}  // namespace spindeg
