#include "twistknot/critical.hpp"

#include <cmath>
#include <vector>

namespace twistknot {

namespace {

double v8_const() {
  static const double v8 = 8.0 * kPi * lobachevsky(0.25);
  return v8;
}

}  // namespace

std::pair<Complex, Complex> seed_from_series(int p) {
  if (p < 6) throw DomainError("seed_from_series: requires p >= 6");
  const double g = 1.0 / p;
  const Complex log1m2i = std::log(Complex(1.0, -2.0));
  const double pi3 = kPi * kPi * kPi;
  const Complex t = log1m2i / kTwoPiI + 1.0 +
                    Complex(1.0, 2.0) * (kPi / 40.0) * g * g +
                    Complex(3.0, 1.0) * (kPi / 80.0) * g * g * g +
                    Complex((180.0 * kPi + 19.0 * pi3) / 9600.0,
                            -(45.0 * kPi - 4.0 * pi3) / 4800.0) *
                        g * g * g * g;
  const Complex s = 0.5 + 0.5 * g + Complex(1.0, -1.0) / 8.0 * g * g -
                    kI / 16.0 * g * g * g -
                    Complex(1.0 / 61.0, (3.0 + kPi * kPi) / 192.0) * g * g * g * g;
  return {t, s};
}

CriticalData solve_critical(int p, const NumericsConfig& cfg) {
  if (p < 6) throw DomainError("solve_critical: requires p >= 6");
  cfg.validate();
  const auto [t_seed, s_seed] = seed_from_series(p);
  Fn2d F = [p](Complex t, Complex s) {
    const auto g = grad_V(p, PotentialPoint{t, s});
    return std::array<Complex, 2>{g[0], g[1]};
  };
  Jac2d J = [p](Complex t, Complex s) {
    const Hessian2 hv = hess_V(p, PotentialPoint{t, s});
    return std::array<Complex, 4>{hv.tt, hv.ts, hv.ts, hv.ss};
  };
  const Newton2dResult sol = newton_solve_2d(F, J, t_seed, s_seed, cfg);

  CriticalData out;
  out.t0 = sol.z1;
  out.s0 = sol.z2;
  out.residual = sol.residual;
  out.x0 = std::exp(kTwoPiI * out.t0);
  out.y0 = std::exp(kTwoPiI * out.s0);
  out.zeta = V(p, PotentialPoint{out.t0, out.s0});
  out.zeta_R = out.zeta.real();
  out.H = H_of(p, out.x0, out.y0);

  // Consistency: x0 = sqrt(y0) - 1/sqrt(y0) + 1 with the principal root.
  const Complex ry = std::sqrt(out.y0);
  if (std::abs(out.x0 - (ry - 1.0 / ry + 1.0)) > 1e-8)
    throw SolverError("solve_critical: x0 fails sqrt(y0) - 1/sqrt(y0) + 1",
                      out.t0, out.s0, out.residual);
  if (!region_contains(RegionSpec::u(0, p), out.t0.real(), out.s0.real()))
    throw SolverError("solve_critical: critical point escaped U_0", out.t0,
                      out.s0, out.residual);

  // omega = sin(2 pi s0) x0 / ((1-x0)^{3/2} sqrt(det Hess V)), both roots
  // principal. Composing the denominator as 2 pi i sqrt(H) instead lands on
  // the opposite branch (the asymptotic ratio J_N/A_N then tends to -1).
  const Complex one_mx = 1.0 - out.x0;
  const Complex det = hess_V(p, PotentialPoint{out.t0, out.s0}).det();
  out.omega = std::sin(2.0 * kPi * out.s0) * out.x0 /
              (std::pow(one_mx, 1.5) * std::sqrt(det));
  return out;
}

double zeta_R_series(int p) {
  if (p < 6) throw DomainError("zeta_R_series: requires p >= 6");
  const double g = 1.0 / p, pi2 = kPi * kPi;
  return v8_const() - pi2 / 4.0 * g * g - pi2 / 8.0 * g * g * g -
         pi2 * (6.0 + pi2) / 192.0 * g * g * g * g;
}

double c_upper(int p, double zeta_R) {
  if (p < 2) throw DomainError("c_upper: requires p >= 2");
  double gap = v8_const() - 2.0 * kPi * zeta_R;
  if (gap < -1e-12)
    throw DomainError("c_upper: 2 pi zeta_R exceeds v8");
  if (gap < 0.0) gap = 0.0;
  return std::sqrt(gap) / kPi + 0.5;
}

Complex slice_critical_T1(double c) {
  if (!(c >= 0.5 && c < 1.0))
    throw DomainError("slice_critical_T1: requires c in [1/2, 1)");
  return 1.0 + principal_log(1.0 - 2.0 * kI * std::sin(kPi * c)) / kTwoPiI;
}

double h_series(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw DomainError("h_series: requires c in (0, 1)");
  // h'(c) = (1/2) log cot(pi/4 + pi u/2), u = c - 1/2; expanding sec in
  // log cot(pi/4 + x) = -2 int_0^x sec(2 xi) d xi gives
  //   h(u) = 2 Lob(1/4) - sum_n A_n u^{2n+2},
  //   A_n = s_n 4^n (pi/2)^{2n+1} / ((2n+1)(2n+2)),  sec z = sum s_n z^{2n}.
  static const std::vector<double> A = [] {
    const int terms = 24;
    std::vector<double> sec(terms, 0.0);
    sec[0] = 1.0;  // recurrence from sec * cos = 1
    for (int n = 1; n < terms; ++n) {
      double acc = 0.0, fact = 1.0;
      for (int k = 1; k <= n; ++k) {
        fact *= (2.0 * k - 1.0) * (2.0 * k);  // (2k)!
        acc += ((k % 2) ? -1.0 : 1.0) / fact * sec[n - k];
      }
      sec[n] = -acc;
    }
    std::vector<double> a(terms);
    for (int n = 0; n < terms; ++n)
      a[n] = sec[n] * std::pow(4.0, n) * std::pow(kPi / 2.0, 2 * n + 1) /
             ((2.0 * n + 1.0) * (2.0 * n + 2.0));
    return a;
  }();
  const double u2 = (c - 0.5) * (c - 0.5);
  double acc = 0.0, upow = u2;
  for (double an : A) {
    acc += an * upow;
    upow *= u2;
  }
  return 2.0 * lobachevsky(0.25) - acc;
}

}  // namespace twistknot
