#include "spindeg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "spindeg/capacity.hpp"
#include "spindeg/channel.hpp"
#include "spindeg/degrade.hpp"
#include "spindeg/diamond.hpp"
#include "spindeg/report.hpp"
#include "spindeg/spin.hpp"
#include "spindeg/verify.hpp"

namespace spindeg {

namespace {

std::string a_mode_name(const RunConfig& cfg) {
  switch (cfg.a_mode) {
    case AFlagMode::optimal: return "optimal";
    case AFlagMode::zero: return "zero";
    case AFlagMode::explicit_value: return "explicit";
  }
  return "optimal";
}

double resolve_a(const RunConfig& cfg, const ChannelFamily& family) {
  switch (cfg.a_mode) {
    case AFlagMode::optimal: return optimal_a(family);
    case AFlagMode::zero: return 0.0;
    case AFlagMode::explicit_value: return cfg.a_value;
  }
  return 0.0;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out);
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing output file: " + cfg.out);
}

std::string fmt_tol(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

ComplexMatrix maximally_entangled_probe(int d) {
  ComplexMatrix psi(d * d, 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi(i * d + i, 0) = amp;
  return psi;
}

}  // namespace

std::vector<double> build_grid(const RunConfig& cfg) {
  if (!(cfg.p_min > 0.0) || !(cfg.p_max < 1.0) || !(cfg.p_min <= cfg.p_max))
    throw std::invalid_argument("p grid bounds must satisfy 0 < p-min <= p-max < 1");
  if (cfg.points < 1) throw std::invalid_argument("grid needs at least one point");
  std::vector<double> grid;
  grid.reserve(cfg.points);
  if (cfg.points == 1) {
    grid.push_back(cfg.p_min);
    return grid;
  }
  const double n1 = cfg.points - 1;
  for (int i = 0; i < cfg.points; ++i) {
    const double t = i / n1;
    grid.push_back(cfg.log_grid ? cfg.p_min * std::pow(cfg.p_max / cfg.p_min, t)
                                : cfg.p_min + (cfg.p_max - cfg.p_min) * t);
  }
  grid.back() = cfg.p_max;  // guard the endpoint against rounding drift
  return grid;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<VerifySuiteResult> suites = run_verify_suites(cfg.seed, cfg.inject_fault);
  std::string failed;
  for (const VerifySuiteResult& suite : suites) {
    char head[160];
    std::snprintf(head, sizeof(head), "suite %s: %s (max defect %.3e, tolerance %s)",
                  suite.name.c_str(), suite.passed ? "PASS" : "FAIL", suite.max_defect,
                  fmt_tol(suite.tolerance).c_str());
    out << head << "\n";
    for (const std::string& line : suite.lines) out << "  " << line << "\n";
    if (!suite.passed) {
      if (!failed.empty()) failed += ", ";
      failed += suite.name;
    }
  }
  if (failed.empty()) {
    out << "verify: all suites passed\n";
    return kExitOk;
  }
  out << "verify: failed suites: " << failed << "\n";
  return kExitVerifyFailed;
}

int cmd_scaling(const RunConfig& cfg, std::ostream& out) {
  const ChannelFamily family = cfg.command == Command::gpc ? ChannelFamily::gpc(cfg.d)
                                                           : ChannelFamily::mls(cfg.j);
  const double a = resolve_a(cfg, family);
  const std::vector<double> grid = build_grid(cfg);
  const std::vector<ScalingRecord> records = scaling_sweep(family, grid, a);

  SlopeFit fit;
  bool have_fit = false;
  std::string fit_error;
  try {
    fit = fit_slope(records);
    have_fit = true;
  } catch (const std::exception& e) {
    fit_error = e.what();
  }

  RunMeta meta;
  meta.command = cfg.command == Command::gpc ? "gpc" : "scaling";
  meta.family = family.label();
  meta.a_mode = a_mode_name(cfg);
  meta.a = a;
  meta.has_a = true;
  meta.seed = cfg.seed;

  const std::string text =
      cfg.format == Format::csv
          ? scaling_table_csv(records, have_fit ? &fit : nullptr, fit_error)
          : scaling_json(meta, records, have_fit ? &fit : nullptr, fit_error);
  write_output(cfg, text, out);

  bool any_ok = records.empty();
  for (const ScalingRecord& rec : records) any_ok = any_ok || rec.ok;
  return any_ok ? kExitOk : kExitSolverFailed;
}

int cmd_capacity(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> grid = build_grid(cfg);
  const std::vector<CapacityPoint> optimal = capacity_curve(cfg.j, grid, AMode::optimal);
  const std::vector<CapacityPoint> generic = capacity_curve(cfg.j, grid, AMode::generic15);

  RunMeta meta;
  meta.command = "capacity";
  meta.family = ChannelFamily::mls(cfg.j).label();
  meta.seed = cfg.seed;

  const std::string text = cfg.format == Format::csv
                               ? capacity_table_csv(optimal, generic)
                               : capacity_json(meta, optimal, generic);
  write_output(cfg, text, out);
  return kExitOk;
}

int cmd_diamond(const RunConfig& cfg, std::ostream& out) {
  const double p = cfg.p_min;
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("diamond evaluation point p-min must lie in [0, 1]");
  const ChannelFamily family =
      cfg.d_given ? ChannelFamily::gpc(cfg.d) : ChannelFamily::mls(cfg.j);

  const KrausChannel channel = family.channel(p);
  const KrausChannel identity = make_kraus_channel(
      {ComplexMatrix::identity(family.input_dim())});
  const LinearMapChoi diff = diff_choi(channel, identity);

  const ComplexMatrix probe = family.kind == ChannelFamily::Kind::mls
                                  ? singlet_state(family.j)
                                  : maximally_entangled_probe(family.d);
  const char* probe_name =
      family.kind == ChannelFamily::Kind::mls ? "singlet" : "maximally entangled";

  const double value = diamond_norm(diff);
  const double lower = diamond_lower_entangled(diff, probe);
  const double upper = diamond_upper_maxnorm(diff);

  out << "family " << family.label() << " at p=" << format_g17(p) << "\n";
  out << "diamond distance to identity: " << format_g17(value) << "\n";
  out << "lower bound (" << probe_name << " probe): " << format_g17(lower) << "\n";
  out << "upper bound (entrywise choi): " << format_g17(upper) << "\n";
  return kExitOk;
}

int run_command(const RunConfig& cfg, std::ostream& out) {
  try {
    switch (cfg.command) {
      case Command::verify: return cmd_verify(cfg, out);
      case Command::scaling:
      case Command::gpc: return cmd_scaling(cfg, out);
      case Command::capacity: return cmd_capacity(cfg, out);
      case Command::diamond: return cmd_diamond(cfg, out);
    }
    throw std::invalid_argument("unknown command");
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return kExitSolverFailed;
  }
}

}  // namespace spindeg
