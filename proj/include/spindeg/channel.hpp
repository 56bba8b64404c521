#pragma once

#include <vector>

#include "spindeg/matrix.hpp"
#include "spindeg/spin.hpp"

namespace spindeg {

// Completely positive trace-preserving map in Kraus form. Construct through
// make_kraus_channel (validates sum K^dag K = I within 1e-10) or, for
// deliberately broken channels in negative controls, through unchecked().
struct KrausChannel {
  int d_in = 0;
  int d_out = 0;
  std::vector<ComplexMatrix> kraus;

  static KrausChannel unchecked(std::vector<ComplexMatrix> ops);
};

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops);

// Linear map represented by its Choi matrix J = sum_ij |i><j| (x) Phi(|i><j|),
// input factor first. Hermitian within 1e-10 by construction.
struct LinearMapChoi {
  int d_in = 0;
  int d_out = 0;
  ComplexMatrix choi;
};

LinearMapChoi make_linear_map_choi(int d_in, int d_out, const ComplexMatrix& choi);

// (1-p) rho + p/(j(j+1)) sum_k J_k rho J_k and its derived scalars.
struct MlsParams {
  double j = 0.0;
  double p = 0.0;

  double gamma() const { return j * (j + 1.0); }      // j(j+1)
  double p_j() const { return p / gamma(); }          // weight on each J_k conjugation
  double c(double x) const;                           // sqrt((1-x) x / j(j+1))
  double cross_coefficient() const { return c(p); }   // the (0,k) block entry scale
};

MlsParams make_mls_params(double j, double p);

// (1-p) rho + p/(d^2-1) sum_{(m,n) != (0,0)} W rho W^dag.
struct GpcParams {
  int d = 0;
  double p = 0.0;

  double q() const { return p / (d * d - 1.0); }
  double shrink() const { return 1.0 - d * d * p / (d * d - 1.0); }  // adjoint eigenvalue
};

GpcParams make_gpc_params(int d, double p);

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho);
ComplexMatrix adjoint_apply(const KrausChannel& ch, const ComplexMatrix& a);

// Four Kraus operators: sqrt(1-p) I and sqrt(p/(j(j+1))) J_k, k = 1,2,3.
// The environment dimension is 4 for every j, including p = 0 and p = 1.
KrausChannel mls_channel(const MlsParams& params);

// d^2 Kraus operators: sqrt(1-p) I in slot (0,0), sqrt(q) W_{m,n} elsewhere.
KrausChannel gpc_channel(const GpcParams& params);

// W_{m,n} = X^m Z^n with X|k> = |k+1 mod d>, Z|k> = omega^k |k>, in
// lexicographic (m,n) order, identity first. No symmetrizing phase.
std::vector<ComplexMatrix> weyl_operators(int d);

LinearMapChoi choi(const KrausChannel& ch);

// Environment side of the Stinespring dilation: output dim = #Kraus of ch,
// Kraus operators E_b with (E_b)_{mu,i} = (K_mu)_{b,i} for b over ch's output.
KrausChannel complementary(const KrausChannel& ch);

// Closed-form 4x4 environment output of the mls channel:
// [0,0] = (1-p) tr rho, [0,k] = [k,0] = c_j(p) tr(J_k rho), [k,l] = p_j tr(J_k rho J_l).
ComplexMatrix mls_complementary_blockform(const MlsParams& params, const ComplexMatrix& rho);

// outer after inner; Kraus products with Frobenius norm < 1e-14 are dropped.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

// Choi of apply(a, .) - apply(b, .). Maps must share both dimensions.
LinearMapChoi diff_choi(const KrausChannel& a, const KrausChannel& b);

// trace_norm( ch(u rho u^dag) - u ch(rho) u^dag ).
double covariance_defect(const KrausChannel& ch, const SpinSystem& s, const ComplexMatrix& u,
                         const ComplexMatrix& rho);

}  // namespace spindeg
