// Python bindings for the main operations: exact evaluation, critical-point
// data, the volume channel, asymptotic models and Fourier coefficients.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistknot/asympt.hpp"
#include "twistknot/fourier.hpp"
#include "twistknot/geometry.hpp"

namespace py = pybind11;
using namespace twistknot;

namespace {

NumericsConfig make_config(const std::string& precision, double quad_abs_tol,
                           double quad_rel_tol, double newton_tol) {
  NumericsConfig cfg;
  if (precision == "extended")
    cfg.precision_mode = PrecisionMode::Extended;
  else if (precision != "machine")
    throw DomainError("precision must be 'machine' or 'extended'");
  cfg.quad_abs_tol = quad_abs_tol;
  cfg.quad_rel_tol = quad_rel_tol;
  cfg.newton_tol = newton_tol;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_twistknot, m) {
  m.doc() = "twist-knot quantum invariants at the half-integer root of unity";

  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<BranchError>(m, "BranchError");
  py::register_exception<SolverError>(m, "SolverError");
  py::register_exception<FitError>(m, "FitError");

  py::class_<NumericsConfig>(m, "NumericsConfig")
      .def(py::init(&make_config), py::arg("precision") = "machine",
           py::arg("quad_abs_tol") = 1e-13, py::arg("quad_rel_tol") = 1e-12,
           py::arg("newton_tol") = 1e-12)
      .def_readwrite("quad_abs_tol", &NumericsConfig::quad_abs_tol)
      .def_readwrite("quad_rel_tol", &NumericsConfig::quad_rel_tol)
      .def_readwrite("newton_tol", &NumericsConfig::newton_tol);

  py::class_<JonesValue>(m, "JonesValue")
      .def_readonly("value", &JonesValue::value)
      .def_readonly("log_abs", &JonesValue::log_abs)
      .def_readonly("term_count", &JonesValue::term_count);

  py::class_<CriticalData>(m, "CriticalData")
      .def_readonly("t0", &CriticalData::t0)
      .def_readonly("s0", &CriticalData::s0)
      .def_readonly("x0", &CriticalData::x0)
      .def_readonly("y0", &CriticalData::y0)
      .def_readonly("zeta", &CriticalData::zeta)
      .def_readonly("zeta_R", &CriticalData::zeta_R)
      .def_readonly("H", &CriticalData::H)
      .def_readonly("omega", &CriticalData::omega)
      .def_readonly("residual", &CriticalData::residual);

  py::class_<GluingSolution>(m, "GluingSolution")
      .def_readonly("w0", &GluingSolution::w0)
      .def_readonly("volcs", &GluingSolution::volcs);

  py::class_<AsymptoticModel>(m, "AsymptoticModel")
      .def_readonly("p", &AsymptoticModel::p)
      .def_readonly("crit", &AsymptoticModel::crit)
      .def_readonly("kappas", &AsymptoticModel::kappas)
      .def_readonly("fit_residual", &AsymptoticModel::fit_residual);

  py::class_<FourierCoefficient>(m, "FourierCoefficient")
      .def_readonly("m", &FourierCoefficient::m)
      .def_readonly("n", &FourierCoefficient::n)
      .def_readonly("value", &FourierCoefficient::value)
      .def_readonly("quad_error", &FourierCoefficient::quad_error);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("N", &ConvergenceRow::N)
      .def_readonly("logJ_scaled", &ConvergenceRow::logJ_scaled)
      .def_readonly("target", &ConvergenceRow::target)
      .def_readonly("gap", &ConvergenceRow::gap);

  m.def(
      "jones",
      [](int p, int N, const NumericsConfig& cfg) {
        return jones_exact(KnotSpec{p, N}, cfg);
      },
      py::arg("p"), py::arg("N"), py::arg("config") = NumericsConfig(),
      "Exact value of the normalized invariant at e^{2 pi i/(N+1/2)}.");

  m.def("critical", &solve_critical, py::arg("p"),
        py::arg("config") = NumericsConfig(),
        "Critical point, growth constant zeta and amplitude omega.");

  m.def("gluing", &solve_gluing, py::arg("p"),
        py::arg("config") = NumericsConfig(),
        "Gluing-equation root and vol + i*cs of the knot complement.");

  m.def("zeta_R_series", &zeta_R_series, py::arg("p"),
        "Large-p series value of 2 pi zeta_R(p).");

  m.def("make_model", &make_model, py::arg("p"),
        py::arg("config") = NumericsConfig(),
        "Correction-free asymptotic model.");

  m.def("approximant", &approximant, py::arg("model"), py::arg("N"),
        "Asymptotic approximant A_N of the exact value.");

  m.def("ratio", &ratio_rN, py::arg("model"), py::arg("N"),
        py::arg("config") = NumericsConfig(), "r_N = J_N / A_N.");

  m.def("fit_kappas", &fit_kappas, py::arg("p"), py::arg("N_samples"),
        py::arg("d"), py::arg("config") = NumericsConfig(),
        "Least-squares fit of the correction coefficients.");

  m.def("convergence", &convergence_experiment, py::arg("p"), py::arg("N_list"),
        py::arg("config") = NumericsConfig(),
        "Rows of (2 pi/(N+1/2)) log|J_N| against 2 pi zeta_R.");

  m.def(
      "hhat",
      [](int p, int N, int m_, int n_, double eps, const NumericsConfig& cfg) {
        return hhat(KnotSpec{p, N}, FourierIndex{m_, n_}, eps, cfg);
      },
      py::arg("p"), py::arg("N"), py::arg("m") = 0, py::arg("n") = 0,
      py::arg("eps") = 0.05, py::arg("config") = NumericsConfig(),
      "Fourier coefficient of the smoothed lattice sum.");
}
