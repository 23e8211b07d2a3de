#include "twistknot/jones.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace twistknot {

namespace {

// Shared term decomposition: every term is sign * exp(L) * e^{i theta} with
// an exactly reduced phase. Templated on the accumulation type so that the
// Extended mode runs the identical algorithm in long double.
template <typename Real>
JonesValue jones_impl(const KnotSpec& spec, bool escalate_on_overflow) {
  const int N = spec.N;
  const long p = spec.p;
  const long order = 2L * N + 1;  // xi^order = 1
  const Real pi = Real(3.14159265358979323846264338327950288L);

  // log |{j}| = log(2 |sin(2 pi j/(2N+1))|) and the sign of the sine,
  // for j = 1 .. 2N (the largest bracket index that occurs).
  std::vector<Real> logbr(2 * N + 1, Real(0));
  std::vector<int> sgn(2 * N + 1, 1);
  for (int j = 1; j <= 2 * N; ++j) {
    const Real s = std::sin(Real(2) * pi * Real(j) / Real(order));
    sgn[j] = (s >= Real(0)) ? 1 : -1;
    logbr[j] = std::log(Real(2) * std::abs(s));
  }
  // Prefix data for {j}! and for prod_{i<=k} {N+i}{N-i}.
  std::vector<Real> logfact(2 * N + 1, Real(0));
  std::vector<int> sgnfact(2 * N + 1, 1);
  for (int j = 1; j <= 2 * N; ++j) {
    logfact[j] = logfact[j - 1] + logbr[j];
    sgnfact[j] = sgnfact[j - 1] * sgn[j];
  }
  std::vector<Real> logprod(N, Real(0));
  std::vector<int> sgnprod(N, 1);
  for (int k = 1; k <= N - 1; ++k) {
    logprod[k] = logprod[k - 1] + logbr[N + k] + logbr[N - k];
    sgnprod[k] = sgnprod[k - 1] * sgn[N + k] * sgn[N - k];
  }

  auto term_log = [&](int k, int l) {
    return logfact[k] + logbr[2 * l + 1] + logprod[k] - logfact[k + l + 1] -
           logfact[k - l];
  };
  auto term_sign = [&](int k, int l) {
    int s = sgnfact[k] * sgn[2 * l + 1] * sgnprod[k] * sgnfact[k + l + 1] *
            sgnfact[k - l];
    return (l % 2 == 0) ? s : -s;
  };
  // Phase: q^{k(k+3)/4 + p l(l+1)} contributes pi*(k(k+3)+4p l(l+1))/(2N+1);
  // the net bracket count k contributes i^k = e^{i pi k/2}.
  auto term_phase = [&](int k, int l) {
    long A = (long(k) * (k + 3) + 4 * p * long(l) * (l + 1)) % (2 * order);
    if (A < 0) A += 2 * order;
    return pi * Real(A) / Real(order) + pi * Real(k % 4) / Real(2);
  };

  // Pass 1: the magnitude scale.
  Real Lmax = -std::numeric_limits<Real>::infinity();
  for (int k = 0; k < N; ++k)
    for (int l = 0; l <= k; ++l) Lmax = std::max(Lmax, term_log(k, l));

  // Pass 2: compensated accumulation of e^{L - Lmax + i theta}.
  Real re = 0, im = 0, cre = 0, cim = 0;
  auto kahan = [](Real& acc, Real& comp, Real x) {
    const Real y = x - comp;
    const Real t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  };
  for (int k = 0; k < N; ++k) {
    for (int l = 0; l <= k; ++l) {
      const Real mag = Real(term_sign(k, l)) * std::exp(term_log(k, l) - Lmax);
      const Real th = term_phase(k, l);
      kahan(re, cre, mag * std::cos(th));
      kahan(im, cim, mag * std::sin(th));
    }
  }

  const Real mod = std::hypot(re, im);
  JonesValue out;
  out.term_count = long(N) * (N + 1) / 2;
  out.log_abs = double(Lmax + std::log(mod));
  if (escalate_on_overflow && out.log_abs > 700.0)
    throw EscalationError(
        "jones_exact: |J_N| exceeds machine-double range; rerun with "
        "PrecisionMode::Extended");
  const Real scale = std::exp(Lmax);
  out.value = Complex(double(re * scale), double(im * scale));
  return out;
}

}  // namespace

JonesValue jones_exact(const KnotSpec& spec, const NumericsConfig& cfg) {
  spec.validate();
  cfg.validate();
  if (cfg.precision_mode == PrecisionMode::Extended)
    return jones_impl<long double>(spec, false);
  return jones_impl<double>(spec, true);
}

int delta_region(double t, double s) {
  // t-s = 0 occurs at diagonal lattice points (k = l) and is admitted.
  if (!(t > 0.0 && t < 1.0 && t - s >= 0.0 && t - s < 1.0))
    throw DomainError("delta_region: requires 0 < t < 1 and 0 <= t-s < 1");
  if (t + s > 0.0 && t + s <= 1.0) return 2;  // boundary resolved to 2
  if (t + s > 1.0 && t + s < 2.0) return 1;
  throw DomainError("delta_region: t+s outside (0, 2)");
}

Complex g_term(const KnotSpec& spec, int k, int l, const NumericsConfig& cfg) {
  spec.validate();
  if (!(0 <= l && l <= k && k <= spec.N - 1))
    throw DomainError("g_term: requires 0 <= l <= k <= N-1");
  const double order = 2.0 * spec.N + 1.0;
  const double t = (2.0 * k + 1.0) / order, s = (2.0 * l + 1.0) / order;
  const int delta = delta_region(t, s);
  const Complex vn = V_N_full(spec, PotentialPoint{t, s}, FourierIndex{0, 0}, cfg);
  const double sign = (spec.p % 2 == 0) ? 1.0 : -1.0;
  const Complex pref = sign * std::exp(kPi * kI / 4.0) /
                       (std::sqrt(spec.N + 0.5) * std::sin(kPi / order));
  return pref * std::sin(2.0 * kPi * (2.0 * l + 1.0) / order) *
         double(delta) * std::exp((spec.N + 0.5) * vn);
}

double v_lattice_bound(int N, double t, double s) {
  if (N < 1) throw DomainError("v_lattice_bound: N must be >= 1");
  const double h = 1.0 / (2.0 * N + 1.0);
  return lobachevsky(t + s + h) + lobachevsky(t - s + h) -
         lobachevsky(t - h) - lobachevsky(t) - lobachevsky(t + h);
}

}  // namespace twistknot
