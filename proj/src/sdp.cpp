#include "spindeg/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spindeg {

namespace {

// Minimal dense real matrix kernel for the solver's per-block work.
struct Dense {
  int n = 0;
  std::vector<double> a;

  explicit Dense(int dim = 0) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
  double& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  double at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  static Dense identity(int dim, double scale) {
    Dense d(dim);
    for (int i = 0; i < dim; ++i) d.at(i, i) = scale;
    return d;
  }
};

Dense multiply(const Dense& x, const Dense& y) {
  Dense out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const double v = x.at(i, k);
      if (v == 0.0) continue;
      const double* yr = &y.a[static_cast<size_t>(k) * y.n];
      double* or_ = &out.a[static_cast<size_t>(i) * out.n];
      for (int j = 0; j < x.n; ++j) or_[j] += v * yr[j];
    }
  return out;
}

// In-place lower Cholesky; false when a pivot drops below eps.
bool cholesky(Dense& m, double eps = 0.0) {
  const int n = m.n;
  for (int k = 0; k < n; ++k) {
    double d = m.at(k, k);
    for (int j = 0; j < k; ++j) d -= m.at(k, j) * m.at(k, j);
    if (!(d > eps)) return false;
    d = std::sqrt(d);
    m.at(k, k) = d;
    for (int i = k + 1; i < n; ++i) {
      double v = m.at(i, k);
      for (int j = 0; j < k; ++j) v -= m.at(i, j) * m.at(k, j);
      m.at(i, k) = v / d;
    }
  }
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) m.at(r, c) = 0.0;
  return true;
}

bool is_positive_definite(Dense m) { return cholesky(m); }

// Inverse from a Cholesky factor: m = L L^T, returns m^{-1}.
Dense invert_spd(const Dense& factor) {
  const int n = factor.n;
  Dense inv(n);
  std::vector<double> col(n);
  for (int e = 0; e < n; ++e) {
    std::fill(col.begin(), col.end(), 0.0);
    col[e] = 1.0;
    for (int i = 0; i < n; ++i) {  // forward L w = e
      double v = col[i];
      for (int j = 0; j < i; ++j) v -= factor.at(i, j) * col[j];
      col[i] = v / factor.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {  // backward L^T x = w
      double v = col[i];
      for (int j = i + 1; j < n; ++j) v -= factor.at(j, i) * col[j];
      col[i] = v / factor.at(i, i);
    }
    for (int i = 0; i < n; ++i) inv.at(i, e) = col[i];
  }
  for (int r = 0; r < n; ++r)  // clean up rounding asymmetry
    for (int c = r + 1; c < n; ++c) {
      const double v = 0.5 * (inv.at(r, c) + inv.at(c, r));
      inv.at(r, c) = v;
      inv.at(c, r) = v;
    }
  return inv;
}

struct Entry {  // fully expanded (both triangles) constraint entry
  int row, col;
  double value;
};

using BlockEntries = std::vector<Entry>;

double dot_sym(const BlockEntries& a, const Dense& m) {
  double s = 0.0;
  for (const Entry& e : a) s += e.value * m.at(e.col, e.row);
  return s;
}

struct Blocked {
  std::vector<Dense> blocks;
};

double inner(const Blocked& x, const Blocked& z) {
  double s = 0.0;
  for (size_t b = 0; b < x.blocks.size(); ++b) {
    const auto& xa = x.blocks[b].a;
    const auto& za = z.blocks[b].a;
    for (size_t i = 0; i < xa.size(); ++i) s += xa[i] * za[i];
  }
  return s;
}

double frob(const Blocked& x) { return std::sqrt(std::max(0.0, inner(x, x))); }

// Largest step alpha in [0, cap] keeping m + alpha * dm positive definite,
// located by bisection on Cholesky success.
double max_step(const Dense& m, const Dense& dm, double cap) {
  auto feasible = [&](double alpha) {
    Dense trial = m;
    for (size_t i = 0; i < trial.a.size(); ++i) trial.a[i] += alpha * dm.a[i];
    return is_positive_definite(trial);
  };
  if (feasible(cap)) return cap;
  double lo = 0.0, hi = cap;
  for (int it = 0; it < 60 && hi - lo > 1e-9 * cap; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

struct Work {
  int n_blocks = 0;
  int m = 0;                                        // constraint count
  std::vector<int> dims;
  std::vector<double> b;                            // scaled rhs
  std::vector<double> row_scale;                    // original / scaled multiplier
  std::vector<std::vector<BlockEntries>> by_block;  // [block][slot] -> entries
  std::vector<std::vector<int>> owners;             // [block][slot] -> constraint index
  Blocked cost;
  double cost_norm = 1.0;
  double b_norm = 1.0;
};

Work prepare(const SdpProblem& prob) {
  Work w;
  w.n_blocks = static_cast<int>(prob.block_dims.size());
  if (w.n_blocks == 0) throw std::invalid_argument("sdp: empty block structure");
  for (int d : prob.block_dims)
    if (d <= 0) throw std::invalid_argument("sdp: block dimensions must be positive");
  w.dims = prob.block_dims;
  w.m = static_cast<int>(prob.constraints.size());
  if (w.m == 0) throw std::invalid_argument("sdp: at least one constraint is required");

  auto check_entry = [&](const SymEntry& e) {
    if (e.block < 0 || e.block >= w.n_blocks)
      throw std::invalid_argument("sdp: entry references a block outside the declared structure");
    if (e.row < 0 || e.col < e.row || e.col >= w.dims[e.block])
      throw std::invalid_argument("sdp: entry indices outside the block (need row <= col)");
    if (!std::isfinite(e.value)) throw std::invalid_argument("sdp: non-finite entry value");
  };

  w.cost.blocks.reserve(w.n_blocks);
  for (int d : w.dims) w.cost.blocks.emplace_back(d);
  for (const SymEntry& e : prob.objective) {
    check_entry(e);
    w.cost.blocks[e.block].at(e.row, e.col) += e.value;
    if (e.row != e.col) w.cost.blocks[e.block].at(e.col, e.row) += e.value;
  }
  w.cost_norm = std::max(1.0, frob(w.cost));

  w.by_block.assign(w.n_blocks, {});
  w.owners.assign(w.n_blocks, {});
  w.b.resize(w.m);
  w.row_scale.resize(w.m);
  for (int k = 0; k < w.m; ++k) {
    const SdpConstraint& con = prob.constraints[k];
    if (con.entries.empty()) throw std::invalid_argument("sdp: constraint with no entries");
    if (!std::isfinite(con.rhs)) throw std::invalid_argument("sdp: non-finite right-hand side");
    double fro = 0.0;
    for (const SymEntry& e : con.entries) {
      check_entry(e);
      fro += e.value * e.value * (e.row == e.col ? 1.0 : 2.0);
    }
    const double scale = 1.0 / std::sqrt(fro);
    if (!std::isfinite(scale)) throw std::invalid_argument("sdp: zero constraint matrix");
    w.row_scale[k] = scale;
    w.b[k] = con.rhs * scale;
    std::vector<BlockEntries> per_block(w.n_blocks);
    for (const SymEntry& e : con.entries) {
      per_block[e.block].push_back({e.row, e.col, e.value * scale});
      if (e.row != e.col) per_block[e.block].push_back({e.col, e.row, e.value * scale});
    }
    for (int blk = 0; blk < w.n_blocks; ++blk) {
      if (per_block[blk].empty()) continue;
      w.by_block[blk].push_back(std::move(per_block[blk]));
      w.owners[blk].push_back(k);
    }
  }
  double bn = 0.0;
  for (double v : w.b) bn += v * v;
  w.b_norm = 1.0 + std::sqrt(bn);
  return w;
}

}  // namespace

SdpSolution solve(const SdpProblem& prob, int max_iterations) {
  const Work w = prepare(prob);
  const int m = w.m;
  int n_total = 0;
  for (int d : w.dims) n_total += d;

  double start_scale = 10.0;
  for (int k = 0; k < m; ++k) start_scale = std::max(start_scale, 2.0 * std::abs(w.b[k]));
  start_scale = std::max(start_scale, 2.0 * frob(w.cost));

  Blocked x, z;
  for (int d : w.dims) {
    x.blocks.push_back(Dense::identity(d, start_scale));
    z.blocks.push_back(Dense::identity(d, start_scale));
  }
  std::vector<double> y(m, 0.0);

  SdpSolution sol;
  sol.y.assign(m, 0.0);

  auto record_state = [&](int iter) {
    sol.iterations = iter;
    sol.primal_value = inner(w.cost, x);
    sol.dual_value = 0.0;
    for (int k = 0; k < m; ++k) sol.dual_value += w.b[k] * y[k];
    sol.gap = std::abs(sol.primal_value - sol.dual_value) /
              (1.0 + std::abs(sol.primal_value) + std::abs(sol.dual_value));
  };

  std::vector<double> r_p(m);
  Blocked r_d;
  for (int d : w.dims) r_d.blocks.emplace_back(d);

  auto compute_residuals = [&]() {
    for (int k = 0; k < m; ++k) r_p[k] = w.b[k];
    for (int blk = 0; blk < w.n_blocks; ++blk)
      for (size_t s = 0; s < w.owners[blk].size(); ++s)
        r_p[w.owners[blk][s]] -= dot_sym(w.by_block[blk][s], x.blocks[blk]);
    for (int blk = 0; blk < w.n_blocks; ++blk) {
      Dense& rd = r_d.blocks[blk];
      rd = w.cost.blocks[blk];
      for (size_t i = 0; i < rd.a.size(); ++i) rd.a[i] -= z.blocks[blk].a[i];
      for (size_t s = 0; s < w.owners[blk].size(); ++s) {
        const double yk = y[w.owners[blk][s]];
        if (yk == 0.0) continue;
        for (const Entry& e : w.by_block[blk][s]) rd.at(e.row, e.col) -= yk * e.value;
      }
    }
    double pr = 0.0;
    for (double v : r_p) pr += v * v;
    sol.primal_residual = std::sqrt(pr) / w.b_norm;
    sol.dual_residual = frob(r_d) / w.cost_norm;
  };

  // Interior-point iterates can degrade after brushing the optimal face
  // (mu keeps shrinking while roundoff pollutes primal feasibility), so the
  // closest-to-converged iterate is snapshotted and is what gets returned.
  struct Best {
    double metric = std::numeric_limits<double>::infinity();
    Blocked x;
    std::vector<double> y;
    double primal = 0.0, dual = 0.0, gap = 0.0, pres = 0.0, dres = 0.0;
  } best;

  auto consider_best = [&]() {
    const double metric =
        std::max({sol.gap, sol.primal_residual, sol.dual_residual});
    if (metric < best.metric) {
      const bool meaningful = metric < 0.999 * best.metric;
      best.metric = metric;
      best.x = x;
      best.y = y;
      best.primal = sol.primal_value;
      best.dual = sol.dual_value;
      best.gap = sol.gap;
      best.pres = sol.primal_residual;
      best.dres = sol.dual_residual;
      return meaningful;
    }
    return false;
  };

  auto finish = [&](SdpStatus status) {
    sol.status = status;
    sol.primal_value = best.primal;
    sol.dual_value = best.dual;
    sol.gap = best.gap;
    sol.primal_residual = best.pres;
    sol.dual_residual = best.dres;
    sol.x_blocks.clear();
    for (const Dense& blk : best.x.blocks) sol.x_blocks.push_back(blk.a);
    for (int k = 0; k < m; ++k) sol.y[k] = best.y[k] * w.row_scale[k];
    return sol;
  };

  const double tol = 1e-9;
  const double loose_tol = 1e-8;

  // Every exit consults the snapshot: a run that already passed through a
  // point meeting the loose tolerance still counts as solved.
  auto classify = [&](SdpStatus fallback) {
    return finish(best.metric <= loose_tol ? SdpStatus::optimal : fallback);
  };

  int since_improved = 0;

  for (int iter = 1; iter <= max_iterations; ++iter) {
    compute_residuals();
    record_state(iter);
    const double mu = inner(x, z) / n_total;
    since_improved = consider_best() ? 0 : since_improved + 1;
    if (best.metric <= tol) return finish(SdpStatus::optimal);
    if (since_improved >= 15) return classify(SdpStatus::numerical_failure);

    // Factor Z blockwise and build the Schur complement M_kl = tr(A_k X A_l Z^{-1}).
    std::vector<Dense> zinv;
    zinv.reserve(w.n_blocks);
    for (int blk = 0; blk < w.n_blocks; ++blk) {
      Dense f = z.blocks[blk];
      if (!cholesky(f)) return classify(SdpStatus::numerical_failure);
      zinv.push_back(invert_spd(f));
    }

    std::vector<double> schur(static_cast<size_t>(m) * m, 0.0);
    for (int blk = 0; blk < w.n_blocks; ++blk) {
      const Dense& xb = x.blocks[blk];
      const Dense& zb = zinv[blk];
      const auto& owners = w.owners[blk];
      const auto& lists = w.by_block[blk];
      for (size_t si = 0; si < owners.size(); ++si) {
        for (size_t sj = si; sj < owners.size(); ++sj) {
          double acc = 0.0;
          for (const Entry& ei : lists[si])
            for (const Entry& ej : lists[sj])
              acc += ei.value * ej.value * xb.at(ei.col, ej.row) * zb.at(ej.col, ei.row);
          schur[static_cast<size_t>(owners[si]) * m + owners[sj]] += acc;
          if (si != sj) schur[static_cast<size_t>(owners[sj]) * m + owners[si]] += acc;
        }
      }
    }

    Dense schur_mat(m);
    schur_mat.a = schur;
    double reg = 0.0;
    Dense schur_factor = schur_mat;
    for (int attempt = 0; attempt < 4 && !cholesky(schur_factor); ++attempt) {
      double diag_max = 1.0;
      for (int i = 0; i < m; ++i) diag_max = std::max(diag_max, schur_mat.at(i, i));
      reg = (reg == 0.0) ? 1e-13 * diag_max : reg * 1e4;
      schur_factor = schur_mat;
      for (int i = 0; i < m; ++i) schur_factor.at(i, i) += reg;
      if (attempt == 3) return classify(SdpStatus::numerical_failure);
    }

    auto schur_solve = [&](std::vector<double> rhs) {
      for (int i = 0; i < m; ++i) {
        double v = rhs[i];
        for (int j = 0; j < i; ++j) v -= schur_factor.at(i, j) * rhs[j];
        rhs[i] = v / schur_factor.at(i, i);
      }
      for (int i = m - 1; i >= 0; --i) {
        double v = rhs[i];
        for (int j = i + 1; j < m; ++j) v -= schur_factor.at(j, i) * rhs[j];
        rhs[i] = v / schur_factor.at(i, i);
      }
      return rhs;
    };

    // Shared pieces of the Newton right-hand side.
    std::vector<double> dot_zinv(m, 0.0), dot_xrz(m, 0.0);
    for (int blk = 0; blk < w.n_blocks; ++blk) {
      const Dense xrz = multiply(multiply(x.blocks[blk], r_d.blocks[blk]), zinv[blk]);
      for (size_t s = 0; s < w.owners[blk].size(); ++s) {
        dot_zinv[w.owners[blk][s]] += dot_sym(w.by_block[blk][s], zinv[blk]);
        dot_xrz[w.owners[blk][s]] += dot_sym(w.by_block[blk][s], xrz);
      }
    }

    auto build_direction = [&](double nu, const Blocked* corr) {
      struct Direction {
        std::vector<double> dy;
        Blocked dz, dx;
      } dir;
      // The second-order term enters the complementarity equation as E Z^{-1}.
      std::vector<Dense> corr_z;
      if (corr)
        for (int blk = 0; blk < w.n_blocks; ++blk)
          corr_z.push_back(multiply(corr->blocks[blk], zinv[blk]));
      std::vector<double> rhs(m);
      std::vector<double> dot_corr(m, 0.0);
      if (corr)
        for (int blk = 0; blk < w.n_blocks; ++blk)
          for (size_t s = 0; s < w.owners[blk].size(); ++s)
            dot_corr[w.owners[blk][s]] += dot_sym(w.by_block[blk][s], corr_z[blk]);
      for (int k = 0; k < m; ++k)
        rhs[k] = w.b[k] - nu * dot_zinv[k] + dot_xrz[k] + dot_corr[k];
      dir.dy = schur_solve(rhs);

      for (int blk = 0; blk < w.n_blocks; ++blk) {
        Dense dz = r_d.blocks[blk];
        for (size_t s = 0; s < w.owners[blk].size(); ++s) {
          const double dyk = dir.dy[w.owners[blk][s]];
          if (dyk == 0.0) continue;
          for (const Entry& e : w.by_block[blk][s]) dz.at(e.row, e.col) -= dyk * e.value;
        }
        dir.dz.blocks.push_back(std::move(dz));
      }

      for (int blk = 0; blk < w.n_blocks; ++blk) {
        // dx = nu Z^{-1} - X - (X dZ + E) Z^{-1}, then symmetrized.
        Dense xdz = multiply(x.blocks[blk], dir.dz.blocks[blk]);
        if (corr)
          for (size_t i = 0; i < xdz.a.size(); ++i) xdz.a[i] += corr->blocks[blk].a[i];
        Dense dx = multiply(xdz, zinv[blk]);
        const Dense& zb = zinv[blk];
        const Dense& xb = x.blocks[blk];
        for (size_t i = 0; i < dx.a.size(); ++i) dx.a[i] = nu * zb.a[i] - xb.a[i] - dx.a[i];
        const int n = dx.n;
        for (int r = 0; r < n; ++r)
          for (int c = r + 1; c < n; ++c) {
            const double v = 0.5 * (dx.at(r, c) + dx.at(c, r));
            dx.at(r, c) = v;
            dx.at(c, r) = v;
          }
        dir.dx.blocks.push_back(std::move(dx));
      }
      return dir;
    };

    auto step_lengths = [&](const Blocked& dx, const Blocked& dz) {
      double ap = 1.0 / 0.98, ad = 1.0 / 0.98;
      for (int blk = 0; blk < w.n_blocks; ++blk) {
        ap = std::min(ap, max_step(x.blocks[blk], dx.blocks[blk], ap));
        ad = std::min(ad, max_step(z.blocks[blk], dz.blocks[blk], ad));
      }
      return std::pair<double, double>(std::min(1.0, 0.98 * ap), std::min(1.0, 0.98 * ad));
    };

    auto predictor = build_direction(0.0, nullptr);
    auto [ap_aff, ad_aff] = step_lengths(predictor.dx, predictor.dz);

    double mu_aff = 0.0;
    {
      Blocked xt = x, zt = z;
      for (int blk = 0; blk < w.n_blocks; ++blk) {
        for (size_t i = 0; i < xt.blocks[blk].a.size(); ++i) {
          xt.blocks[blk].a[i] += ap_aff * predictor.dx.blocks[blk].a[i];
          zt.blocks[blk].a[i] += ad_aff * predictor.dz.blocks[blk].a[i];
        }
      }
      mu_aff = inner(xt, zt) / n_total;
    }
    double sigma = std::pow(std::max(0.0, mu_aff / std::max(mu, 1e-300)), 3.0);
    // Floor keeps mu from collapsing orders of magnitude past the target in
    // one step, which strands the iterate on the boundary before the
    // feasibility residuals have caught up.
    sigma = std::min(1.0, std::max(sigma, 1e-4));

    Blocked second_order;
    for (int blk = 0; blk < w.n_blocks; ++blk)
      second_order.blocks.push_back(
          multiply(predictor.dx.blocks[blk], predictor.dz.blocks[blk]));

    auto corrector = build_direction(sigma * mu, &second_order);
    auto [ap, ad] = step_lengths(corrector.dx, corrector.dz);
    if (ap < 1e-7 && ad < 1e-7) return classify(SdpStatus::numerical_failure);

    for (int blk = 0; blk < w.n_blocks; ++blk) {
      for (size_t i = 0; i < x.blocks[blk].a.size(); ++i) {
        x.blocks[blk].a[i] += ap * corrector.dx.blocks[blk].a[i];
        z.blocks[blk].a[i] += ad * corrector.dz.blocks[blk].a[i];
      }
    }
    for (int k = 0; k < m; ++k) y[k] += ad * corrector.dy[k];
  }

  compute_residuals();
  record_state(sol.iterations);
  consider_best();
  return classify(SdpStatus::max_iterations);
}

}  // namespace spindeg
