#pragma once

#include <vector>

namespace spindeg {

// One entry of a real symmetric matrix living in one diagonal block of the
// SDP variable. row <= col; the mirrored entry is implied.
struct SymEntry {
  int block = 0;
  int row = 0;
  int col = 0;
  double value = 0.0;
};

struct SdpConstraint {
  std::vector<SymEntry> entries;  // the symmetric matrix A_k
  double rhs = 0.0;               // <A_k, X> = rhs
};

// Standard-form semidefinite program over a block-diagonal PSD variable:
// minimize <C, X> subject to <A_k, X> = b_k, X >= 0.
struct SdpProblem {
  std::vector<int> block_dims;
  std::vector<SymEntry> objective;
  std::vector<SdpConstraint> constraints;
};

enum class SdpStatus { optimal, max_iterations, numerical_failure };

struct SdpSolution {
  SdpStatus status = SdpStatus::numerical_failure;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;              // |primal - dual| / (1 + |primal| + |dual|)
  double primal_residual = 0.0;  // ||<A,X> - b||_2 / (1 + ||b||_2)
  double dual_residual = 0.0;    // ||C - Z - sum y A||_F / (1 + ||C||_F)
  int iterations = 0;
  std::vector<std::vector<double>> x_blocks;  // row-major dense primal blocks
  std::vector<double> y;
};

// Primal-dual interior point method (HKM search direction, Mehrotra
// predictor-corrector, dense Cholesky on the Schur complement). Targets
// relative gap and feasibility residuals of 1e-9; a run that stalls within
// 1e-8 still reports optimal. Starts from identity-scaled strictly feasible
// cones; step length is 0.98 of the distance to the cone boundary.
SdpSolution solve(const SdpProblem& prob, int max_iterations = 200);

}  // namespace spindeg
