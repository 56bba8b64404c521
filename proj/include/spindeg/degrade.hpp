#pragma once

#include <string>
#include <vector>

#include "spindeg/channel.hpp"

namespace spindeg {

// Channel family selector: the spin conjugation mixture at spin j, or the
// uniform generalized Pauli mixture in dimension d.
struct ChannelFamily {
  enum class Kind { mls, gpc };
  Kind kind = Kind::mls;
  double j = 0.0;  // mls only
  int d = 0;       // gpc only

  static ChannelFamily mls(double j);
  static ChannelFamily gpc(int d);

  KrausChannel channel(double p) const;
  int input_dim() const;
  std::string label() const;  // "mls(j=3/2)", "gpc(d=3)"
};

// Recipe for the structured degrading map: the family's complementary channel
// taken at the perturbed noise s = p + a p^2.
struct DegradeSpec {
  ChannelFamily family;
  double p = 0.0;
  double a = 0.0;

  double s() const { return p + a * p * p; }
};

// Validates p in (0,1), a >= 0, and s = p + a p^2 <= 1.
DegradeSpec make_degrade_spec(ChannelFamily family, double p, double a);

// The perturbation weight that cancels the leading cross term:
// 2/(j(j+1)) for mls, 2 d^2/(d^2 - 1) for gpc.
double optimal_a(const ChannelFamily& family);

KrausChannel degrading_map(const DegradeSpec& spec);

struct ScalingRecord {
  std::string family;
  double p = 0.0;
  double a = 0.0;
  double eta = 0.0;        // diamond norm of the difference map
  double eta_upper = 0.0;  // entrywise Choi bound
  double eta_lower = 0.0;  // maximally entangled probe bound
  bool floor_flag = false;  // below 1e-8: recorded but excluded from fits
  bool ok = true;           // false when this grid point failed; see error
  std::string error;
};

// eta = || N^c - D o N ||_diamond with both analytic bounds alongside.
// Solver failures are rethrown with the offending family/p/a in the message.
ScalingRecord eta(const DegradeSpec& spec);

// Nine log-spaced points in [1e-3, 1e-1]. Below 1e-3 a quadratically scaling
// eta approaches the solver tolerance and would contaminate slope fits.
std::vector<double> standard_grid();

// One record per grid point, in grid order; points that throw are returned
// with ok = false instead of aborting the sweep.
std::vector<ScalingRecord> scaling_sweep(const ChannelFamily& family,
                                         const std::vector<double>& p_grid, double a);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // max abs residual in log space
  int points = 0;
};

// Least-squares line through (ln p, ln eta) over the usable records, i.e.
// those with ok set and no floor flag. Throws when fewer than three remain.
SlopeFit fit_slope(const std::vector<ScalingRecord>& records);

// Signed leading coefficient of the (0,k) cross block of the complementary
// difference, c_j(p) - c_j(s) (1 - p/(j(j+1))); the optimal a drives this to
// O(p^{5/2}). Defined for the mls family only.
double cross_term_residual(const DegradeSpec& spec);

}  // namespace spindeg
