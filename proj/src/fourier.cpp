#include "twistknot/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace twistknot {

namespace {

// Integration box: the bounding rectangle of D'_0 (psi vanishes outside).
constexpr double kTLo = 0.5, kTHi = 0.909;
constexpr double kSLo = 0.2, kSHi = 0.8;
constexpr int kGaussOrder = 10;

// Interpolant domain wide enough for every phi argument hit inside D'_0:
// t+s+h-1 and t-s+h lie in [0.02, 0.7+h]; t-h, t, t+h lie in
// [0.5-h, 0.909+h].
std::pair<double, double> phi_domain(int N) {
  const double h = 1.0 / (2.0 * N + 1.0);
  const double lo = std::max(0.004, std::min(0.02, kTLo - h) - 0.005);
  const double hi = std::min(0.996, kTHi + h + 0.005);
  return {lo, hi};
}

const KnotSpec& checked(const KnotSpec& spec, double eps, int n_cap) {
  spec.validate();
  if (spec.p < 6) throw DomainError("FourierEngine: requires p >= 6");
  if (spec.N > n_cap)
    throw DomainError(
        "FourierEngine: N exceeds the configured cap (cost grows like N^3); "
        "raise n_cap explicitly to override");
  if (!(eps > 0.0 && eps < 0.17))
    throw DomainError("FourierEngine: eps must lie in (0, 0.17)");
  return spec;
}

}  // namespace

FourierEngine::FourierEngine(const KnotSpec& spec, double eps,
                             const NumericsConfig& cfg, int n_cap)
    : spec_(checked(spec, eps, n_cap)),
      eps_(eps),
      cfg_(cfg),
      phi_(RootOfUnity::make(spec.N), phi_domain(spec.N).first,
           phi_domain(spec.N).second, cfg.quad_abs_tol, cfg) {}

Complex FourierEngine::integrand(const FourierIndex& idx, double t,
                                 double s) const {
  const double psi = bump_psi(t, s, eps_);
  if (psi <= 0.0) return Complex(0.0, 0.0);
  const Complex vn = V_N_full(spec_, t, s, idx,
                              [this](double x) { return phi_(x); });
  return psi * std::sin(2.0 * kPi * s) *
         std::exp((spec_.N + 0.5) * vn);
}

Complex FourierEngine::integrate(const FourierIndex& idx, int panels) const {
  const auto& gl = gauss_legendre(kGaussOrder);
  const double dt = (kTHi - kTLo) / panels;
  const double ds = (kSHi - kSLo) / panels;
  Complex acc(0.0, 0.0);
  for (int i = 0; i < panels; ++i) {
    const double t0 = kTLo + i * dt;
    for (int j = 0; j < panels; ++j) {
      const double s0 = kSLo + j * ds;
      Complex panel(0.0, 0.0);
      for (const auto& [xt, wt] : gl) {
        const double t = t0 + dt * 0.5 * (xt + 1.0);
        for (const auto& [xs, ws] : gl) {
          const double s = s0 + ds * 0.5 * (xs + 1.0);
          panel += wt * ws * integrand(idx, t, s);
        }
      }
      acc += panel * (dt * 0.5) * (ds * 0.5);
    }
  }
  return acc;
}

FourierCoefficient FourierEngine::hhat(const FourierIndex& idx) const {
  const int base = std::max(6, spec_.N);
  const Complex coarse = integrate(idx, base);
  const Complex fine = integrate(idx, 2 * base);

  const double half = spec_.N + 0.5;
  const int sign_exp = spec_.p + idx.m + idx.n;
  const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
  const Complex pref = sign * std::exp(kPi * kI / 4.0) * std::pow(half, 1.5) /
                       std::sin(kPi / (2.0 * spec_.N + 1.0));

  FourierCoefficient out;
  out.m = idx.m;
  out.n = idx.n;
  out.N = spec_.N;
  out.p = spec_.p;
  out.value = pref * fine;
  out.quad_error = std::abs(pref) * std::abs(fine - coarse);
  return out;
}

Complex FourierEngine::lattice_sum() const {
  const double order = 2.0 * spec_.N + 1.0;
  Complex acc(0.0, 0.0);
  for (int k = 0; k < spec_.N; ++k) {
    const double t = (2.0 * k + 1.0) / order;
    if (t < kTLo || t > kTHi) continue;
    for (int l = 0; l <= k; ++l) {
      const double s = (2.0 * l + 1.0) / order;
      const double psi = bump_psi(t, s, eps_);
      if (psi <= 0.0) continue;
      acc += psi * g_term(spec_, k, l, cfg_);
    }
  }
  return acc;
}

FourierCoefficient hhat(const KnotSpec& spec, const FourierIndex& idx,
                        double eps, const NumericsConfig& cfg) {
  return FourierEngine(spec, eps, cfg).hhat(idx);
}

std::pair<Complex, Complex> poisson_check(const KnotSpec& spec, int window,
                                          double eps,
                                          const NumericsConfig& cfg) {
  if (window < 2) throw DomainError("poisson_check: window must be >= 2");
  const FourierEngine engine(spec, eps, cfg);
  const Complex lattice = engine.lattice_sum();
  Complex spectral(0.0, 0.0);
  for (int m = -1; m <= 1; ++m)
    for (int n = -window; n <= window; ++n)
      spectral += engine.hhat(FourierIndex{m, n}).value;
  return {lattice, spectral};
}

}  // namespace twistknot
