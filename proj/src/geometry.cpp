#include "twistknot/geometry.hpp"

#include <cmath>

namespace twistknot {

namespace {

Complex R_term(Complex logU, Complex U) {
  return 0.5 * logU * std::log(1.0 - U) + li2(U);
}

// R(w) + R(-1/w) + R(1/(1-w)) + R(w/(w+1)); the second term uses the
// log(-1/w) branch fixed by the side condition.
Complex sum_R(Complex w) {
  return R_term(std::log(w), w) + R_term(log_minus_inv(w), -1.0 / w) +
         R_term(std::log(1.0 / (1.0 - w)), 1.0 / (1.0 - w)) +
         R_term(std::log(w / (w + 1.0)), w / (w + 1.0));
}

// log(w-1) + 2 log(-1/w) - log(-1/w - 1): the combination entering the
// meridian correction of vol + i*cs.
Complex phi_tilde(Complex w) {
  return std::log(w - 1.0) + 2.0 * log_minus_inv(w) -
         std::log(-1.0 / w - 1.0);
}

}  // namespace

Complex log_minus_inv(Complex w) { return -kPi * kI - std::log(w); }

Complex gluing_residual(int p, Complex w) {
  return -std::log(w - 1.0) + 2.0 * (2.0 * p - 1.0) * log_minus_inv(w) +
         std::log(-1.0 / w - 1.0) - (3.0 - 2.0 * p) * kPi * kI;
}

GluingSolution solve_gluing(int p, const NumericsConfig& cfg) {
  cfg.validate();
  const CriticalData cd = solve_critical(p, cfg);
  const Complex seed = std::exp(-kPi * kI * cd.s0);

  Complex w = seed;
  bool converged = false;
  for (int it = 0; it < cfg.newton_max_iter; ++it) {
    const Complex f = gluing_residual(p, w);
    if (std::abs(f) < cfg.newton_tol) {
      converged = true;
      break;
    }
    // d/dw of the residual.
    const Complex df = -1.0 / (w - 1.0) - 2.0 * (2.0 * p - 1.0) / w -
                       1.0 / (w * (w + 1.0));
    w -= f / df;
  }
  if (!converged)
    throw SolverError("solve_gluing: Newton failed to converge", w, seed,
                      std::abs(gluing_residual(p, w)));
  if (std::abs(w - seed) > 1e-6 * (1.0 + std::abs(seed)))
    throw SolverError("solve_gluing: root does not match e^{-pi i s0}", w,
                      seed, std::abs(w - seed));

  GluingSolution out;
  out.w0 = w;
  out.volcs = vol_cs_from_w(p, w);
  return out;
}

Complex vol_cs_from_w(int p, Complex w0) {
  if (p < 2) throw DomainError("vol_cs_from_w: requires p >= 2");
  const Complex raw =
      kI * sum_R(w0) -
      kPi / 2.0 *
          (2.0 * kPi * kI + 2.0 * kPi * kI / double(p) +
           (phi_tilde(w0) + kPi * kI) / double(p));
  // Chern-Simons part lives mod pi^2: pick the representative in
  // (-pi^2/2, pi^2/2].
  const double pi2 = kPi * kPi;
  double im = raw.imag() - pi2 * std::floor(raw.imag() / pi2 + 0.5);
  if (im <= -pi2 / 2.0) im += pi2;
  return Complex(raw.real(), im);
}

Complex F_of_w(Complex w0) {
  return kI * sum_R(w0) + kPi * kPi * kI -
         kPi * (2.0 * log_minus_inv(w0) + kPi * kI);
}

Complex G_of_w(Complex w0) {
  const Complex x = w0 - 1.0 / w0 + 1.0;
  const Complex w2 = w0 * w0;
  return kPi * (-2.0 * std::log(x) + 2.0 * std::log(w0) +
                3.0 * kPi * kI / 2.0) +
         kPi * (-std::log(w0) / (kPi * kI) - 0.5) *
             (std::log(1.0 - x / w2) - std::log(1.0 - x * w2)) +
         (1.0 / kI) * (kPi * kPi / 6.0 - 3.0 * li2(x) + li2(x / w2) +
                       li2(x * w2));
}

}  // namespace twistknot
