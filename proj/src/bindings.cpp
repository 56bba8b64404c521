#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "spindeg/capacity.hpp"
#include "spindeg/channel.hpp"
#include "spindeg/degrade.hpp"
#include "spindeg/diamond.hpp"
#include "spindeg/matrix.hpp"
#include "spindeg/spin.hpp"

namespace py = pybind11;

namespace {

using spindeg::ComplexMatrix;

using NumpyComplex =
    py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix from_numpy(const NumpyComplex& arr) {
  const py::buffer_info info = arr.request();
  if (info.ndim != 2) throw std::invalid_argument("expected a 2-d complex array");
  ComplexMatrix m(static_cast<int>(info.shape[0]), static_cast<int>(info.shape[1]));
  const auto* data = static_cast<const std::complex<double>*>(info.ptr);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = data[r * m.cols() + c];
  return m;
}

py::array_t<std::complex<double>> to_numpy(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto* data = static_cast<std::complex<double>*>(out.request().ptr);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) data[r * m.cols() + c] = m(r, c);
  return out;
}

std::vector<py::array_t<std::complex<double>>> kraus_to_numpy(
    const spindeg::KrausChannel& ch) {
  std::vector<py::array_t<std::complex<double>>> out;
  out.reserve(ch.kraus.size());
  for (const ComplexMatrix& k : ch.kraus) out.push_back(to_numpy(k));
  return out;
}

spindeg::KrausChannel kraus_from_numpy(const std::vector<NumpyComplex>& ops) {
  std::vector<ComplexMatrix> ks;
  ks.reserve(ops.size());
  for (const NumpyComplex& op : ops) ks.push_back(from_numpy(op));
  return spindeg::make_kraus_channel(ks);
}

spindeg::ChannelFamily family_from(const std::string& kind, double j, int d) {
  if (kind == "mls") return spindeg::ChannelFamily::mls(j);
  if (kind == "gpc") return spindeg::ChannelFamily::gpc(d);
  throw std::invalid_argument("family must be 'mls' or 'gpc'");
}

py::dict record_to_dict(const spindeg::ScalingRecord& rec) {
  py::dict out;
  out["family"] = rec.family;
  out["p"] = rec.p;
  out["a"] = rec.a;
  if (rec.ok) {
    out["eta"] = rec.eta;
    out["eta_lower"] = rec.eta_lower;
    out["eta_upper"] = rec.eta_upper;
    out["floor_flag"] = rec.floor_flag;
  } else {
    out["error"] = rec.error;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Degradability and capacity bounds for spin mixture and generalized "
      "Pauli channels";

  m.def(
      "spin_operators",
      [](double j) {
        const spindeg::SpinSystem s = spindeg::make_spin(j);
        return py::make_tuple(to_numpy(s.j1), to_numpy(s.j2), to_numpy(s.j3));
      },
      py::arg("j"), "The three spin-j generator matrices, dimension 2j+1.");

  m.def(
      "singlet_state",
      [](double j) { return to_numpy(spindeg::singlet_state(j)); }, py::arg("j"),
      "Total-angular-momentum-zero vector in the doubled spin-j space, as a "
      "(d^2, 1) column.");

  m.def(
      "mls_kraus",
      [](double j, double p) {
        return kraus_to_numpy(spindeg::mls_channel(spindeg::make_mls_params(j, p)));
      },
      py::arg("j"), py::arg("p"),
      "Kraus operators of the spin mixture channel (1-p) rho + p LS(rho).");

  m.def(
      "gpc_kraus",
      [](int d, double p) {
        return kraus_to_numpy(spindeg::gpc_channel(spindeg::make_gpc_params(d, p)));
      },
      py::arg("d"), py::arg("p"),
      "Kraus operators of the uniform generalized Pauli channel in dimension d.");

  m.def(
      "apply_kraus",
      [](const std::vector<NumpyComplex>& ops, const NumpyComplex& rho) {
        return to_numpy(spindeg::apply(kraus_from_numpy(ops), from_numpy(rho)));
      },
      py::arg("kraus"), py::arg("rho"), "Applies sum_k K rho K^dag.");

  m.def(
      "complementary_kraus",
      [](const std::vector<NumpyComplex>& ops) {
        return kraus_to_numpy(spindeg::complementary(kraus_from_numpy(ops)));
      },
      py::arg("kraus"), "Kraus operators of the map to the environment.");

  m.def(
      "choi_matrix",
      [](const std::vector<NumpyComplex>& ops) {
        return to_numpy(spindeg::choi(kraus_from_numpy(ops)).choi);
      },
      py::arg("kraus"), "Choi matrix sum_ij |i><j| (x) Phi(|i><j|).");

  m.def(
      "diamond_norm",
      [](const NumpyComplex& choi, int d_in, int d_out) {
        return spindeg::diamond_norm(spindeg::make_linear_map_choi(d_in, d_out, from_numpy(choi)));
      },
      py::arg("choi"), py::arg("d_in"), py::arg("d_out"),
      "Completely bounded trace norm of the map with the given Choi matrix, "
      "by semidefinite programming.");

  m.def(
      "optimal_a",
      [](const std::string& family, double j, int d) {
        return spindeg::optimal_a(family_from(family, j, d));
      },
      py::arg("family"), py::arg("j") = 1.0, py::arg("d") = 2,
      "Perturbation weight cancelling the leading cross term: 2/(j(j+1)) or "
      "2d^2/(d^2-1).");

  m.def(
      "eta",
      [](const std::string& family, double p, double a, double j, int d) {
        return record_to_dict(
            spindeg::eta(spindeg::make_degrade_spec(family_from(family, j, d), p, a)));
      },
      py::arg("family"), py::arg("p"), py::arg("a"), py::arg("j") = 1.0, py::arg("d") = 2,
      "Diamond distance between the complementary channel and the structured "
      "degrading map at s = p + a p^2, with probe and entrywise bounds.");

  m.def(
      "scaling_sweep",
      [](const std::string& family, const std::vector<double>& grid, double a, double j,
         int d) {
        std::vector<py::dict> out;
        for (const spindeg::ScalingRecord& rec :
             spindeg::scaling_sweep(family_from(family, j, d), grid, a))
          out.push_back(record_to_dict(rec));
        return out;
      },
      py::arg("family"), py::arg("grid"), py::arg("a"), py::arg("j") = 1.0,
      py::arg("d") = 2, "One eta record per grid point; failures carry an 'error' key.");

  m.def(
      "fit_slope",
      [](const std::string& family, const std::vector<double>& grid, double a, double j,
         int d) {
        const spindeg::SlopeFit fit =
            spindeg::fit_slope(spindeg::scaling_sweep(family_from(family, j, d), grid, a));
        py::dict out;
        out["slope"] = fit.slope;
        out["intercept"] = fit.intercept;
        out["residual"] = fit.residual;
        out["points"] = fit.points;
        return out;
      },
      py::arg("family"), py::arg("grid"), py::arg("a"), py::arg("j") = 1.0,
      py::arg("d") = 2, "Least-squares slope of ln eta against ln p over the grid.");

  m.def(
      "vn_entropy",
      [](const NumpyComplex& rho) { return spindeg::vn_entropy(from_numpy(rho)); },
      py::arg("rho"), "Von Neumann entropy in bits.");

  m.def(
      "coherent_info",
      [](const std::vector<NumpyComplex>& ops, const NumpyComplex& rho) {
        return spindeg::coherent_info(kraus_from_numpy(ops), from_numpy(rho));
      },
      py::arg("kraus"), py::arg("rho"), "S(N(rho)) - S(N^c(rho)) in bits.");

  m.def("ic_mls_pi", &spindeg::ic_mls_pi, py::arg("j"), py::arg("p"),
        "Closed-form coherent information of the spin mixture at the maximally "
        "mixed input.");

  m.def("delta_correction", &spindeg::delta_correction, py::arg("eta"), py::arg("d_env"),
        "Continuity correction delta(eta, d_env) entering the capacity bound.");

  m.def(
      "capacity_curve",
      [](double j, const std::vector<double>& grid, const std::string& mode) {
        spindeg::AMode a_mode;
        if (mode == "optimal")
          a_mode = spindeg::AMode::optimal;
        else if (mode == "generic15")
          a_mode = spindeg::AMode::generic15;
        else
          throw std::invalid_argument("mode must be 'optimal' or 'generic15'");
        std::vector<py::dict> out;
        for (const spindeg::CapacityPoint& pt : spindeg::capacity_curve(j, grid, a_mode)) {
          py::dict row;
          row["p"] = pt.p;
          row["ic"] = pt.ic;
          row["eta"] = pt.eta;
          row["delta"] = pt.delta;
          row["lower_bound"] = pt.lower_bound;
          out.push_back(row);
        }
        return out;
      },
      py::arg("j"), py::arg("grid"), py::arg("mode"),
      "Capacity lower-bound curve for the spin-j mixture; mode picks the "
      "perturbation weight.");
}
