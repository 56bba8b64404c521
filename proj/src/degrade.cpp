#include "spindeg/degrade.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "spindeg/diamond.hpp"

namespace spindeg {

namespace {

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

ComplexMatrix maximally_entangled(int d) {
  ComplexMatrix v(d * d, 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i, 0) = amp;
  return v;
}

}  // namespace

ChannelFamily ChannelFamily::mls(double j) {
  make_mls_params(j, 0.0);  // reject invalid spin values up front
  ChannelFamily f;
  f.kind = Kind::mls;
  f.j = j;
  return f;
}

ChannelFamily ChannelFamily::gpc(int d) {
  make_gpc_params(d, 0.0);
  ChannelFamily f;
  f.kind = Kind::gpc;
  f.d = d;
  return f;
}

KrausChannel ChannelFamily::channel(double p) const {
  if (kind == Kind::mls) return mls_channel(make_mls_params(j, p));
  return gpc_channel(make_gpc_params(d, p));
}

int ChannelFamily::input_dim() const {
  if (kind == Kind::mls) return static_cast<int>(std::lround(2.0 * j + 1.0));
  return d;
}

std::string ChannelFamily::label() const {
  if (kind == Kind::mls) {
    const long two_j = std::lround(2.0 * j);
    if (two_j % 2 == 0) return "mls(j=" + std::to_string(two_j / 2) + ")";
    return "mls(j=" + std::to_string(two_j) + "/2)";
  }
  return "gpc(d=" + std::to_string(d) + ")";
}

DegradeSpec make_degrade_spec(ChannelFamily family, double p, double a) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("degrade: p must lie strictly inside (0,1)");
  if (!(a >= 0.0)) throw std::invalid_argument("degrade: a must be nonnegative");
  DegradeSpec spec{family, p, a};
  if (spec.s() > 1.0)
    throw std::invalid_argument("degrade: s = p + a p^2 = " + short_double(spec.s()) +
                                " exceeds 1");
  return spec;
}

double optimal_a(const ChannelFamily& family) {
  if (family.kind == ChannelFamily::Kind::mls) return 2.0 / (family.j * (family.j + 1.0));
  const double dd = static_cast<double>(family.d) * family.d;
  return 2.0 * dd / (dd - 1.0);
}

KrausChannel degrading_map(const DegradeSpec& spec) {
  return complementary(spec.family.channel(spec.s()));
}

ScalingRecord eta(const DegradeSpec& spec) {
  ScalingRecord rec;
  rec.family = spec.family.label();
  rec.p = spec.p;
  rec.a = spec.a;

  const KrausChannel n = spec.family.channel(spec.p);
  const LinearMapChoi phi =
      diff_choi(complementary(n), compose(degrading_map(spec), n));
  try {
    rec.eta = diamond_norm(phi);
  } catch (const std::exception& e) {
    throw std::runtime_error("eta: " + rec.family + " p=" + short_double(spec.p) +
                             " a=" + short_double(spec.a) + ": " + e.what());
  }
  rec.eta_upper = diamond_upper_maxnorm(phi);
  rec.eta_lower = diamond_lower_entangled(phi, maximally_entangled(n.d_in));
  rec.floor_flag = rec.eta < 1e-8;
  return rec;
}

std::vector<double> standard_grid() {
  std::vector<double> grid;
  grid.reserve(9);
  for (int i = 0; i < 9; ++i) grid.push_back(std::pow(10.0, -3.0 + 0.25 * i));
  return grid;
}

std::vector<ScalingRecord> scaling_sweep(const ChannelFamily& family,
                                         const std::vector<double>& p_grid, double a) {
  if (p_grid.empty()) throw std::invalid_argument("scaling_sweep: empty grid");
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0))
      throw std::invalid_argument("scaling_sweep: grid values must be positive");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
      throw std::invalid_argument("scaling_sweep: grid must be strictly ascending");
  }

  std::vector<ScalingRecord> records;
  records.reserve(p_grid.size());
  for (double p : p_grid) {
    try {
      records.push_back(eta(make_degrade_spec(family, p, a)));
    } catch (const std::exception& e) {
      ScalingRecord rec;
      rec.family = family.label();
      rec.p = p;
      rec.a = a;
      rec.ok = false;
      rec.error = e.what();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

SlopeFit fit_slope(const std::vector<ScalingRecord>& records) {
  std::vector<std::pair<double, double>> pts;  // (ln p, ln eta)
  for (const ScalingRecord& rec : records) {
    if (!rec.ok || rec.floor_flag) continue;
    if (!(rec.eta > 0.0))
      throw std::invalid_argument("fit_slope: nonpositive eta in an unflagged record");
    pts.emplace_back(std::log(rec.p), std::log(rec.eta));
  }
  if (pts.size() < 3)
    throw std::invalid_argument("fit_slope: need at least 3 usable records");

  double mx = 0.0, my = 0.0;
  for (const auto& [px, py] : pts) {
    mx += px;
    my += py;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());

  double sxx = 0.0, sxy = 0.0;
  for (const auto& [px, py] : pts) {
    sxx += (px - mx) * (px - mx);
    sxy += (px - mx) * (py - my);
  }

  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = static_cast<int>(pts.size());
  for (const auto& [px, py] : pts)
    fit.residual = std::max(fit.residual, std::abs(fit.intercept + fit.slope * px - py));
  return fit;
}

double cross_term_residual(const DegradeSpec& spec) {
  if (spec.family.kind != ChannelFamily::Kind::mls)
    throw std::invalid_argument("cross_term_residual: defined for the mls family only");
  const MlsParams params = make_mls_params(spec.family.j, spec.p);
  return params.c(spec.p) - params.c(spec.s()) * (1.0 - params.p_j());
}

}  // namespace spindeg
