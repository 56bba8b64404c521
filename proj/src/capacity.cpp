#include "spindeg/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "spindeg/degrade.hpp"

namespace spindeg {

double vn_entropy(const ComplexMatrix& rho) {
  const HermitianEig eig = herm_eig(rho);
  double trace = 0.0;
  for (double lambda : eig.eigenvalues) trace += lambda;
  if (std::abs(trace - 1.0) > 1e-10)
    throw std::invalid_argument("vn_entropy: input trace is not 1");
  if (eig.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("vn_entropy: input has a negative eigenvalue");

  double s = 0.0;
  for (double lambda : eig.eigenvalues)
    if (lambda >= 1e-14) s -= lambda * std::log2(lambda);
  return std::max(s, 0.0);  // guards against -eps on pure states
}

double binary_entropy(double x) {
  if (!(x >= 0.0) || !(x <= 1.0))
    throw std::invalid_argument("binary_entropy: argument outside [0,1]");
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

double coherent_info(const KrausChannel& ch, const ComplexMatrix& rho) {
  return vn_entropy(apply(ch, rho)) - vn_entropy(apply(complementary(ch), rho));
}

double ic_mls_pi(double j, double p) {
  const MlsParams params = make_mls_params(j, p);  // validates j and p
  double v = std::log2(2.0 * params.j + 1.0);
  if (p < 1.0) v += (1.0 - p) * std::log2(1.0 - p);
  if (p > 0.0) v += p * std::log2(p / 3.0);
  return v;
}

double delta_correction(double eta, int d_e) {
  if (!(eta >= 0.0) || !(eta <= 2.0))
    throw std::invalid_argument("delta_correction: eta outside [0,2]");
  if (d_e < 2) throw std::invalid_argument("delta_correction: environment dimension < 2");
  const double de = static_cast<double>(d_e);
  return 0.5 * eta * std::log2(de - 1.0) + eta * std::log2(de) +
         binary_entropy(0.5 * eta) + (1.0 + 0.5 * eta) * binary_entropy(eta / (2.0 + eta));
}

std::vector<CapacityPoint> capacity_curve(double j, const std::vector<double>& p_grid,
                                          AMode a_mode) {
  if (p_grid.empty()) throw std::invalid_argument("capacity_curve: empty grid");
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0) || !(p_grid[i] <= 0.2))
      throw std::invalid_argument("capacity_curve: grid values must lie in (0, 0.2]");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
      throw std::invalid_argument("capacity_curve: grid must be strictly ascending");
  }

  const ChannelFamily family = ChannelFamily::mls(j);
  const double a = optimal_a(family);
  const int env_dim = 4;

  auto eta_opt = [&](double p) { return eta(make_degrade_spec(family, p, a)).eta; };

  std::vector<CapacityPoint> points;
  points.reserve(p_grid.size());

  if (a_mode == AMode::optimal) {
    for (double p : p_grid) {
      CapacityPoint pt;
      pt.p = p;
      pt.ic = ic_mls_pi(j, p);
      pt.eta = eta_opt(p);
      pt.delta = delta_correction(pt.eta, env_dim);
      pt.lower_bound = pt.ic - pt.delta;
      points.push_back(pt);
    }
    return points;
  }

  // generic15: eta = C p^1.5, pinned to the computed value at the top of the
  // grid so the two curves are comparable without an arbitrary offset.
  const double p_top = p_grid.back();
  const double c = eta_opt(p_top) / std::pow(p_top, 1.5);
  for (double p : p_grid) {
    CapacityPoint pt;
    pt.p = p;
    pt.ic = ic_mls_pi(j, p);
    pt.eta = c * std::pow(p, 1.5);
    pt.delta = delta_correction(pt.eta, env_dim);
    pt.lower_bound = pt.ic - pt.delta;
    points.push_back(pt);
  }
  return points;
}

}  // namespace spindeg
