#include "spindeg/diamond.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spindeg/sdp.hpp"

namespace spindeg {

namespace {

struct Triple {
  int row, col;
  double value;
};

// Upper-triangle pattern per Hermitian basis element of the complex space of
// dimension n, written in the real embedding below. Diagonal elements first,
// then the real and imaginary off-diagonal pairs.
using Pattern = std::vector<Triple>;

std::vector<Pattern> hermitian_basis_patterns(int n) {
  std::vector<Pattern> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) out.push_back({{i, i, 1.0}, {n + i, n + i, 1.0}});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back({{i, j, 1.0}, {n + i, n + j, 1.0}});
      out.push_back({{i, n + j, -1.0}, {j, n + i, 1.0}});
    }
  return out;
}

// Real embedding R(H) = [[Re H, -Im H], [Im H, Re H]], row-major 2n x 2n.
// Complex PSD constraints become real symmetric ones with every eigenvalue
// doubled in multiplicity; inner products pick up a factor 2 on BOTH sides of
// our equality rows (patterns and right-hand sides are dotted the same way),
// and the infinity-norm epigraph only looks at the largest eigenvalue, so no
// compensating factor appears anywhere downstream.
std::vector<double> embed(const ComplexMatrix& h) {
  const int n = h.rows();
  std::vector<double> r(static_cast<size_t>(4) * n * n, 0.0);
  const int w = 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = h(i, j).real();
      const double im = h(i, j).imag();
      r[static_cast<size_t>(i) * w + j] = re;
      r[static_cast<size_t>(i) * w + n + j] = -im;
      r[static_cast<size_t>(n + i) * w + j] = im;
      r[static_cast<size_t>(n + i) * w + n + j] = re;
    }
  return r;
}

// <pattern, M> for symmetric M given as a row-major dense of width w; the
// stored upper-triangle entry stands for both mirror positions.
double dot_pattern(const Pattern& pat, const std::vector<double>& m, int w) {
  double s = 0.0;
  for (const Triple& t : pat) {
    const double v = m[static_cast<size_t>(t.row) * w + t.col];
    s += t.value * v * (t.row == t.col ? 1.0 : 2.0);
  }
  return s;
}

}  // namespace

double diamond_norm(const LinearMapChoi& phi) {
  const int da = phi.d_in;
  const int db = phi.d_out;
  const int d = da * db;

  // Blocks: 0 = Y - J, 1 = Y + J, 2 = t I - Tr_out(Y), 3 = t. All embedded.
  SdpProblem prob;
  prob.block_dims = {2 * d, 2 * d, 2 * da, 1};
  prob.objective = {{3, 0, 0, 1.0}};

  const std::vector<double> rj = embed(phi.choi);
  const std::vector<double> rtr =
      embed(partial_trace(phi.choi, da, db, Subsystem::b));

  for (const Pattern& pat : hermitian_basis_patterns(d)) {
    SdpConstraint con;
    for (const Triple& t : pat) {
      con.entries.push_back({1, t.row, t.col, t.value});
      con.entries.push_back({0, t.row, t.col, -t.value});
    }
    con.rhs = 2.0 * dot_pattern(pat, rj, 2 * d);
    prob.constraints.push_back(std::move(con));
  }

  for (const Pattern& pat : hermitian_basis_patterns(da)) {
    SdpConstraint con;
    double trace_coeff = 0.0;
    for (const Triple& t : pat) {
      con.entries.push_back({2, t.row, t.col, t.value});
      if (t.row == t.col) trace_coeff += t.value;
      // Lifting the pattern through Tr_out: entry (u, v) of the reference
      // space fans out over the traced index. Embedded index u = r*da + s
      // maps to r*d + s*db + b, which keeps row <= col.
      const int r1 = t.row / da, s1 = t.row % da;
      const int r2 = t.col / da, s2 = t.col % da;
      for (int b = 0; b < db; ++b)
        con.entries.push_back({0, r1 * d + s1 * db + b, r2 * d + s2 * db + b, t.value});
    }
    if (trace_coeff != 0.0) con.entries.push_back({3, 0, 0, -trace_coeff});
    con.rhs = -dot_pattern(pat, rtr, 2 * da);
    prob.constraints.push_back(std::move(con));
  }

  const SdpSolution sol = solve(prob);
  if (sol.status != SdpStatus::optimal)
    throw std::runtime_error(
        sol.status == SdpStatus::max_iterations
            ? "diamond_norm: iteration cap reached before convergence"
            : "diamond_norm: numerical failure in the interior-point solve");
  return sol.primal_value;
}

double diamond_upper_maxnorm(const LinearMapChoi& phi) {
  return static_cast<double>(phi.d_in) * phi.d_out * phi.d_out * max_norm(phi.choi);
}

double diamond_lower_entangled(const LinearMapChoi& phi, const ComplexMatrix& probe) {
  const int da = phi.d_in;
  const int db = phi.d_out;
  if (probe.cols() != 1 || probe.rows() != da * da)
    throw std::invalid_argument(
        "diamond_lower_entangled: probe must be a column vector on input (x) input");
  double nrm = 0.0;
  for (int i = 0; i < probe.rows(); ++i) nrm += std::norm(probe(i, 0));
  if (std::abs(nrm - 1.0) > 1e-10)
    throw std::invalid_argument("diamond_lower_entangled: probe must be a unit vector");

  // (id (x) Phi)(|probe><probe|) assembled straight from the Choi matrix:
  // out[(r,o),(r',o')] = sum_{i,i'} probe(r,i) conj(probe(r',i')) J[(i,o),(i',o')].
  ComplexMatrix out(da * db, da * db);
  for (int r = 0; r < da; ++r)
    for (int rp = 0; rp < da; ++rp)
      for (int i = 0; i < da; ++i) {
        const std::complex<double> left = probe(r * da + i, 0);
        if (left == std::complex<double>(0.0, 0.0)) continue;
        for (int ip = 0; ip < da; ++ip) {
          const std::complex<double> w = left * std::conj(probe(rp * da + ip, 0));
          if (w == std::complex<double>(0.0, 0.0)) continue;
          for (int o = 0; o < db; ++o)
            for (int op = 0; op < db; ++op)
              out(r * db + o, rp * db + op) += w * phi.choi(i * db + o, ip * db + op);
        }
      }
  return trace_norm(out);
}

}  // namespace spindeg
