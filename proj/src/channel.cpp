#include "spindeg/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spindeg {

namespace {

void validate_kraus_shapes(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw std::invalid_argument("channel needs at least one Kraus operator");
  for (const ComplexMatrix& k : ops)
    if (k.rows() != ops.front().rows() || k.cols() != ops.front().cols())
      throw std::invalid_argument("Kraus operators must share a common shape");
}

}  // namespace

KrausChannel KrausChannel::unchecked(std::vector<ComplexMatrix> ops) {
  validate_kraus_shapes(ops);
  KrausChannel ch;
  ch.d_out = ops.front().rows();
  ch.d_in = ops.front().cols();
  ch.kraus = std::move(ops);
  return ch;
}

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops) {
  KrausChannel ch = KrausChannel::unchecked(std::move(ops));
  ComplexMatrix sum(ch.d_in, ch.d_in);
  for (const ComplexMatrix& k : ch.kraus) sum += k.adjoint() * k;
  sum -= ComplexMatrix::identity(ch.d_in);
  if (max_norm(sum) > 1e-10)
    throw std::invalid_argument("Kraus operators are not trace preserving within 1e-10");
  return ch;
}

LinearMapChoi make_linear_map_choi(int d_in, int d_out, const ComplexMatrix& choi) {
  if (choi.rows() != d_in * d_out || choi.cols() != d_in * d_out)
    throw std::invalid_argument("Choi matrix dimension does not match d_in * d_out");
  if (!is_hermitian(choi, 1e-10))
    throw std::invalid_argument("Choi matrix is not Hermitian within 1e-10");
  LinearMapChoi phi;
  phi.d_in = d_in;
  phi.d_out = d_out;
  phi.choi = ComplexMatrix(choi.rows(), choi.cols());
  for (int r = 0; r < choi.rows(); ++r)
    for (int c = 0; c < choi.cols(); ++c)
      phi.choi(r, c) = 0.5 * (choi(r, c) + std::conj(choi(c, r)));
  return phi;
}

MlsParams make_mls_params(double j, double p) {
  make_spin(j);  // reuse the half-integer validation
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("mixing parameter p must lie in [0, 1]");
  return MlsParams{j, p};
}

double MlsParams::c(double x) const {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("cross coefficient argument outside [0, 1]");
  return std::sqrt((1.0 - x) * x / gamma());
}

GpcParams make_gpc_params(int d, double p) {
  if (d < 2) throw std::invalid_argument("generalized Pauli channel needs dimension >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("mixing parameter p must lie in [0, 1]");
  return GpcParams{d, p};
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw std::invalid_argument("apply: state dimension does not match the channel input");
  ComplexMatrix out(ch.d_out, ch.d_out);
  for (const ComplexMatrix& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

ComplexMatrix adjoint_apply(const KrausChannel& ch, const ComplexMatrix& a) {
  if (a.rows() != ch.d_out || a.cols() != ch.d_out)
    throw std::invalid_argument("adjoint_apply: operator dimension does not match the channel output");
  ComplexMatrix out(ch.d_in, ch.d_in);
  for (const ComplexMatrix& k : ch.kraus) out += k.adjoint() * a * k;
  return out;
}

KrausChannel mls_channel(const MlsParams& params) {
  SpinSystem s = make_spin(params.j);
  const double root_pj = std::sqrt(params.p_j());
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::sqrt(1.0 - params.p) * ComplexMatrix::identity(s.d));
  ops.push_back(root_pj * s.j1);
  ops.push_back(root_pj * s.j2);
  ops.push_back(root_pj * s.j3);
  return make_kraus_channel(std::move(ops));
}

std::vector<ComplexMatrix> weyl_operators(int d) {
  if (d < 2) throw std::invalid_argument("Weyl operators need dimension >= 2");
  const double two_pi = 6.283185307179586476925286766559;
  ComplexMatrix x(d, d), z(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
    z(k, k) = std::exp(Complex(0.0, two_pi * k / d));
  }
  std::vector<ComplexMatrix> ws;
  ws.reserve(static_cast<size_t>(d) * d);
  ComplexMatrix xm = ComplexMatrix::identity(d);
  for (int m = 0; m < d; ++m) {
    ComplexMatrix w = xm;
    for (int n = 0; n < d; ++n) {
      ws.push_back(w);
      w = w * z;
    }
    xm = x * xm;
  }
  return ws;
}

KrausChannel gpc_channel(const GpcParams& params) {
  std::vector<ComplexMatrix> ws = weyl_operators(params.d);
  const double root_q = std::sqrt(params.q());
  std::vector<ComplexMatrix> ops;
  ops.reserve(ws.size());
  ops.push_back(std::sqrt(1.0 - params.p) * ws[0]);
  for (size_t i = 1; i < ws.size(); ++i) ops.push_back(root_q * ws[i]);
  return make_kraus_channel(std::move(ops));
}

LinearMapChoi choi(const KrausChannel& ch) {
  const int dim = ch.d_in * ch.d_out;
  ComplexMatrix j(dim, dim);
  // J = sum_K w w^dag with w[(i,o)] = K(o,i): the vectorized Kraus operators.
  for (const ComplexMatrix& k : ch.kraus) {
    std::vector<Complex> w(dim);
    for (int i = 0; i < ch.d_in; ++i)
      for (int o = 0; o < ch.d_out; ++o) w[i * ch.d_out + o] = k(o, i);
    for (int r = 0; r < dim; ++r) {
      if (w[r] == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < dim; ++c) j(r, c) += w[r] * std::conj(w[c]);
    }
  }
  return make_linear_map_choi(ch.d_in, ch.d_out, j);
}

KrausChannel complementary(const KrausChannel& ch) {
  const int n_env = static_cast<int>(ch.kraus.size());
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.d_out);
  for (int b = 0; b < ch.d_out; ++b) {
    ComplexMatrix e(n_env, ch.d_in);
    for (int mu = 0; mu < n_env; ++mu)
      for (int i = 0; i < ch.d_in; ++i) e(mu, i) = ch.kraus[mu](b, i);
    ops.push_back(std::move(e));
  }
  return make_kraus_channel(std::move(ops));
}

ComplexMatrix mls_complementary_blockform(const MlsParams& params, const ComplexMatrix& rho) {
  SpinSystem s = make_spin(params.j);
  if (rho.rows() != s.d || rho.cols() != s.d)
    throw std::invalid_argument("blockform: state dimension does not match 2j+1");
  const ComplexMatrix* jk[3] = {&s.j1, &s.j2, &s.j3};
  ComplexMatrix out(4, 4);
  out(0, 0) = (1.0 - params.p) * rho.trace();
  const double cp = params.cross_coefficient();
  for (int k = 0; k < 3; ++k) {
    const Complex t = ((*jk[k]) * rho).trace();
    out(0, k + 1) = cp * t;
    out(k + 1, 0) = cp * t;
  }
  const double pj = params.p_j();
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) out(k + 1, l + 1) = pj * ((*jk[k]) * rho * (*jk[l])).trace();
  return out;
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (inner.d_out != outer.d_in)
    throw std::invalid_argument("compose: inner output dimension does not match outer input");
  std::vector<ComplexMatrix> ops;
  for (const ComplexMatrix& a : outer.kraus)
    for (const ComplexMatrix& b : inner.kraus) {
      ComplexMatrix prod = a * b;
      if (prod.frobenius_norm() < 1e-14) continue;  // exact zeros from p = 0 limits
      ops.push_back(std::move(prod));
    }
  return make_kraus_channel(std::move(ops));
}

LinearMapChoi diff_choi(const KrausChannel& a, const KrausChannel& b) {
  if (a.d_in != b.d_in || a.d_out != b.d_out)
    throw std::invalid_argument("diff_choi: channels must share input and output dimensions");
  LinearMapChoi ja = choi(a);
  const LinearMapChoi jb = choi(b);
  ja.choi -= jb.choi;
  return make_linear_map_choi(a.d_in, a.d_out, ja.choi);
}

double covariance_defect(const KrausChannel& ch, const SpinSystem& s, const ComplexMatrix& u,
                         const ComplexMatrix& rho) {
  if (ch.d_in != s.d || ch.d_out != s.d)
    throw std::invalid_argument("covariance_defect: channel does not act on the spin system");
  if (u.rows() != s.d || u.cols() != s.d || rho.rows() != s.d || rho.cols() != s.d)
    throw std::invalid_argument("covariance_defect: operator dimensions do not match the spin system");
  const ComplexMatrix lhs = apply(ch, u * rho * u.adjoint());
  const ComplexMatrix rhs = u * apply(ch, rho) * u.adjoint();
  return trace_norm(lhs - rhs);
}

}  // namespace spindeg
