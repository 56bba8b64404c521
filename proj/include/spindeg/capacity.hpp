#pragma once

#include <vector>

#include "spindeg/channel.hpp"
#include "spindeg/matrix.hpp"

namespace spindeg {

// All entropic quantities are in bits (base-2 logarithms).

// -sum lambda log2 lambda over the spectrum; eigenvalues below 1e-14 are
// treated as exact zeros. Rejects inputs that are not states (PSD within
// 1e-10, unit trace within 1e-10).
double vn_entropy(const ComplexMatrix& rho);

// -x log2 x - (1-x) log2(1-x) on [0,1], endpoints 0.
double binary_entropy(double x);

// S(N(rho)) - S(N^c(rho)).
double coherent_info(const KrausChannel& ch, const ComplexMatrix& rho);

// Closed form at the maximally mixed input:
// log2(2j+1) + (1-p) log2(1-p) + p log2(p/3), limits at p in {0,1} by
// continuity.
double ic_mls_pi(double j, double p);

// Continuity correction
// (eta/2) log2(d_e - 1) + eta log2(d_e) + h(eta/2) + (1 + eta/2) h(eta/(2+eta))
// for eta in [0,2] and d_e >= 2.
double delta_correction(double eta, int d_e);

enum class AMode { optimal, generic15 };

struct CapacityPoint {
  double p = 0.0;
  double ic = 0.0;
  double eta = 0.0;
  double delta = 0.0;
  double lower_bound = 0.0;  // ic - delta
};

// One point per grid value for the spin-j mixture. optimal mode computes eta
// through the degrading-map machinery at the cancellation-optimal a;
// generic15 substitutes the power law eta = C p^1.5 with C calibrated so the
// two modes agree at the largest grid point. Grid must be strictly ascending
// inside (0, 0.2].
std::vector<CapacityPoint> capacity_curve(double j, const std::vector<double>& p_grid,
                                          AMode a_mode);

}  // namespace spindeg
