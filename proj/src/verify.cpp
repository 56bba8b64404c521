#include "spindeg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "spindeg/channel.hpp"
#include "spindeg/diamond.hpp"
#include "spindeg/matrix.hpp"
#include "spindeg/rng.hpp"
#include "spindeg/sdp.hpp"
#include "spindeg/spin.hpp"

namespace spindeg {

namespace {

constexpr double kFault = 1e-6;

double defect(const ComplexMatrix& a, const ComplexMatrix& b) { return max_norm(a - b); }

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string spin_label(double j) {
  const long two_j = std::lround(2.0 * j);
  char buf[32];
  if (two_j % 2 == 0)
    std::snprintf(buf, sizeof(buf), "%ld", two_j / 2);
  else
    std::snprintf(buf, sizeof(buf), "%ld/2", two_j);
  return buf;
}

ComplexMatrix random_density(Rng& rng, int d) {
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  ComplexMatrix rho = g * g.adjoint();
  Complex tr = rho.trace();
  rho *= 1.0 / tr.real();
  return rho;
}

// Gaussian matrix orthonormalized column by column; slicing the result into
// d_out-row strips yields Kraus operators of a random CPTP map.
ComplexMatrix random_isometry(Rng& rng, int rows, int cols) {
  ComplexMatrix v(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) v(r, c) = Complex(rng.gaussian(), rng.gaussian());
  for (int c = 0; c < cols; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      Complex overlap(0.0, 0.0);
      for (int r = 0; r < rows; ++r) overlap += std::conj(v(r, prev)) * v(r, c);
      for (int r = 0; r < rows; ++r) v(r, c) -= overlap * v(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < rows; ++r) norm += std::norm(v(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < rows; ++r) v(r, c) *= 1.0 / norm;
  }
  return v;
}

KrausChannel random_cptp(Rng& rng, int d_in, int d_out, int n_kraus) {
  ComplexMatrix v = random_isometry(rng, d_out * n_kraus, d_in);
  std::vector<ComplexMatrix> ks;
  for (int k = 0; k < n_kraus; ++k) {
    ComplexMatrix op(d_out, d_in);
    for (int r = 0; r < d_out; ++r)
      for (int c = 0; c < d_in; ++c) op(r, c) = v(k * d_out + r, c);
    ks.push_back(op);
  }
  return make_kraus_channel(ks);
}

VerifySuiteResult spin_algebra_suite(bool fault) {
  VerifySuiteResult res;
  res.name = "spin-algebra";
  res.tolerance = 1e-12;

  const Complex im(0.0, 1.0);
  double worst_comm = 0.0, worst_trace = 0.0, worst_herm = 0.0, worst_conj = 0.0;
  for (double j : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    SpinSystem s = make_spin(j);
    if (fault) s.j3(0, 0) += kFault;
    const double jj = j * (j + 1.0);
    const ComplexMatrix id = ComplexMatrix::identity(s.d);
    const ComplexMatrix* jk[3] = {&s.j1, &s.j2, &s.j3};

    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix& a = *jk[k];
      const ComplexMatrix& next = *jk[(k + 1) % 3];
      const ComplexMatrix& prev = *jk[(k + 2) % 3];
      worst_comm = std::max(worst_comm, defect(a * next - next * a, im * prev));
      worst_trace = std::max(worst_trace, std::abs(a.trace()));
      worst_herm = std::max(worst_herm, defect(a, a.adjoint()));

      worst_conj = std::max(worst_conj, defect(conjugation_sum(s, a), (jj - 1.0) * a));
      worst_conj = std::max(
          worst_conj, defect(conjugation_sum(s, a * a), (jj - 3.0) * (a * a) + jj * id));
      worst_conj = std::max(worst_conj, defect(conjugation_sum(s, a * next),
                                               (jj - 3.0) * (a * next) + im * prev));
    }

    const double casimir =
        defect(s.j1 * s.j1 + s.j2 * s.j2 + s.j3 * s.j3, jj * id);
    res.lines.push_back("casimir defect j=" + spin_label(j) + ": " + fmt("%.3e", casimir));
    res.max_defect = std::max(res.max_defect, casimir);
  }
  res.lines.push_back(fmt("commutation relations: %.3e", worst_comm));
  res.lines.push_back(fmt("tracelessness: %.3e", worst_trace));
  res.lines.push_back(fmt("hermiticity: %.3e", worst_herm));
  res.lines.push_back(fmt("conjugation identities: %.3e", worst_conj));
  res.max_defect = std::max({res.max_defect, worst_comm, worst_trace, worst_herm, worst_conj});
  res.passed = res.max_defect <= res.tolerance;
  return res;
}

VerifySuiteResult channel_structure_suite(std::uint64_t seed, bool fault) {
  VerifySuiteResult res;
  res.name = "channel-structure";
  res.tolerance = 1e-12;

  Rng rng(seed);
  double worst_block = 0.0, worst_env = 0.0, worst_tp = 0.0;
  for (double j : {1.0, 1.5}) {
    for (double p : {0.05, 0.3}) {
      const MlsParams params = make_mls_params(j, p);
      const KrausChannel ch = mls_channel(params);

      KrausChannel comp = complementary(ch);
      if (fault) {
        // Skips the trace-preservation check on purpose: the perturbed
        // channel must reach the comparisons below, not throw here.
        std::vector<ComplexMatrix> ks = comp.kraus;
        ks[0] *= 1.0 + kFault;
        comp = KrausChannel::unchecked(ks);
      }

      for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix rho = random_density(rng, ch.d_in);
        worst_block = std::max(
            worst_block, defect(apply(comp, rho), mls_complementary_blockform(params, rho)));
      }

      ComplexMatrix pi = ComplexMatrix::identity(ch.d_in);
      pi *= 1.0 / ch.d_in;
      ComplexMatrix env_ref(4, 4);
      env_ref(0, 0) = 1.0 - p;
      for (int k = 1; k < 4; ++k) env_ref(k, k) = p / 3.0;
      worst_env = std::max(worst_env, defect(apply(comp, pi), env_ref));

      ComplexMatrix tp(ch.d_in, ch.d_in);
      for (const ComplexMatrix& k : ch.kraus) tp += k.adjoint() * k;
      worst_tp = std::max(worst_tp, defect(tp, ComplexMatrix::identity(ch.d_in)));
    }
  }

  double worst_spin_eig = 0.0;
  for (double j : {1.0, 1.5}) {
    const SpinSystem s = make_spin(j);
    const ComplexMatrix* jk[3] = {&s.j1, &s.j2, &s.j3};
    for (double p : {0.05, 0.2}) {
      const MlsParams params = make_mls_params(j, p);
      const KrausChannel ch = mls_channel(params);
      const double scale = 1.0 - p / params.gamma();
      for (int k = 0; k < 3; ++k)
        worst_spin_eig =
            std::max(worst_spin_eig, defect(adjoint_apply(ch, *jk[k]), scale * *jk[k]));
    }
  }

  double worst_weyl_eig = 0.0;
  for (int d : {2, 3}) {
    const std::vector<ComplexMatrix> weyl = weyl_operators(d);
    for (double p : {0.05, 0.2}) {
      const GpcParams params = make_gpc_params(d, p);
      const KrausChannel ch = gpc_channel(params);
      for (std::size_t w = 1; w < weyl.size(); ++w)
        worst_weyl_eig = std::max(
            worst_weyl_eig, defect(adjoint_apply(ch, weyl[w]), params.shrink() * weyl[w]));

      ComplexMatrix tp(d, d);
      for (const ComplexMatrix& k : ch.kraus) tp += k.adjoint() * k;
      worst_tp = std::max(worst_tp, defect(tp, ComplexMatrix::identity(d)));
    }
  }

  res.lines.push_back(fmt("complementary block form vs isometry (20 states each): %.3e", worst_block));
  res.lines.push_back(fmt("environment state at the maximally mixed input: %.3e", worst_env));
  res.lines.push_back(fmt("spin operator eigen-invariance under the adjoint: %.3e", worst_spin_eig));
  res.lines.push_back(fmt("weyl operator eigen-invariance under the adjoint: %.3e", worst_weyl_eig));
  res.lines.push_back(fmt("trace preservation: %.3e", worst_tp));
  res.max_defect = std::max({worst_block, worst_env, worst_spin_eig, worst_weyl_eig, worst_tp});
  res.passed = res.max_defect <= res.tolerance;
  return res;
}

// Epigraph form of lambda_max: pin Y = t I - A entry by entry, minimize t.
SdpProblem lambda_max_problem(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  SdpProblem prob;
  prob.block_dims = {n, 1};
  prob.objective = {{1, 0, 0, 1.0}};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SdpConstraint con;
      con.entries.push_back({0, i, j, 1.0});
      if (i == j) con.entries.push_back({1, 0, 0, -1.0});
      // Symmetric patterns hit both triangles, doubling off-diagonal products.
      con.rhs = (i == j) ? -a[i][j] : -2.0 * a[i][j];
      prob.constraints.push_back(con);
    }
  return prob;
}

VerifySuiteResult sdp_oracle_suite(std::uint64_t seed, bool fault) {
  VerifySuiteResult res;
  res.name = "sdp-oracle";
  res.tolerance = 1e-7;

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double worst_eig = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    ComplexMatrix h(n, n);
    double max_abs = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = rng.uniform(-3.0, 3.0);
        a[i][j] = v;
        a[j][i] = v;
        h(i, j) = v;
        h(j, i) = v;
        max_abs = std::max(max_abs, std::abs(v));
      }
    // Diagonal shift keeps the pinned slack block feasible at the optimum.
    const double shift = max_abs * n + 1.0;
    for (int i = 0; i < n; ++i) a[i][i] += shift;

    const SdpSolution sol = solve(lambda_max_problem(a));
    if (sol.status != SdpStatus::optimal)
      throw std::runtime_error("sdp-oracle suite: lambda_max solve did not converge");
    double reference = herm_eig(h).eigenvalues.back();
    if (fault) reference += 1e-5;
    worst_eig = std::max(worst_eig, std::abs(sol.primal_value - shift - reference) /
                                        std::max(1.0, std::abs(reference)));
  }

  const std::vector<std::vector<double>> pinned = {{1.0, 0.0}, {0.0, -1.0}};
  const SdpSolution pinned_sol = solve(lambda_max_problem(pinned));
  const double pinned_defect =
      pinned_sol.status == SdpStatus::optimal ? std::abs(pinned_sol.primal_value - 1.0) : 1.0;

  const KrausChannel cptp = random_cptp(rng, 2, 2, 2);
  const LinearMapChoi choi_map = choi(cptp);
  const double dn = diamond_norm(choi_map);
  const double cptp_defect = std::abs(dn - 1.0);

  ComplexMatrix probe(4, 1);
  probe(0, 0) = 1.0 / std::numbers::sqrt2;
  probe(3, 0) = 1.0 / std::numbers::sqrt2;
  const double lower = diamond_lower_entangled(choi_map, probe);
  const double upper = diamond_upper_maxnorm(choi_map);
  const double sandwich =
      std::max({0.0, lower - dn, dn - upper});

  res.lines.push_back(fmt("lambda_max agreement over 10 seeded problems: %.3e", worst_eig));
  res.lines.push_back(fmt("pinned two-level problem: %.3e", pinned_defect));
  res.lines.push_back(fmt("diamond norm of a random channel vs 1: %.3e", cptp_defect));
  res.lines.push_back(fmt("probe lower / entrywise upper sandwich slack: %.3e", sandwich));
  res.max_defect = std::max({worst_eig, pinned_defect, cptp_defect, sandwich});
  res.passed = res.max_defect <= res.tolerance;
  return res;
}

}  // namespace

std::vector<VerifySuiteResult> run_verify_suites(std::uint64_t seed,
                                                 const std::string& inject_fault) {
  if (!inject_fault.empty() && inject_fault != "spin-algebra" &&
      inject_fault != "channel-structure" && inject_fault != "sdp-oracle")
    throw std::invalid_argument("unknown verification suite: " + inject_fault);
  std::vector<VerifySuiteResult> out;
  out.push_back(spin_algebra_suite(inject_fault == "spin-algebra"));
  out.push_back(channel_structure_suite(seed, inject_fault == "channel-structure"));
  out.push_back(sdp_oracle_suite(seed, inject_fault == "sdp-oracle"));
  return out;
}

}  // namespace spindeg
