#include "twistknot/potential.hpp"

#include <cmath>

namespace twistknot {

void KnotSpec::validate() const {
  if (p == 0) throw DomainError("KnotSpec: twist parameter p must be nonzero");
  if (N < 1) throw DomainError("KnotSpec: color N must be >= 1");
}

namespace {

Complex cis(Complex z) { return std::exp(kTwoPiI * z); }

Complex li2_sum(int /*p*/, Complex t, Complex s) {
  return li2(cis(t + s)) + li2(cis(t - s)) - 3.0 * li2(cis(t)) +
         kPi * kPi / 6.0;
}

}  // namespace

Complex V(int p, const PotentialPoint& pt) {
  const Complex t = pt.t, s = pt.s;
  return kPi * kI * ((2.0 * p + 1.0) * s * s - (2.0 * p + 3.0) * s - 2.0 * t) +
         li2_sum(p, t, s) / kTwoPiI;
}

Complex V_mn(int p, const PotentialPoint& pt, const FourierIndex& idx) {
  return V(p, pt) - kTwoPiI * (double(idx.m) * pt.t + double(idx.n) * pt.s);
}

Complex V_N_full(const KnotSpec& spec, const PotentialPoint& pt,
                 const FourierIndex& idx, const NumericsConfig& cfg) {
  spec.validate();
  const RootOfUnity ru = RootOfUnity::make(spec.N);
  auto phi = [&](Complex z) { return phi_N(ru, z, cfg); };
  const double h = 1.0 / (2.0 * spec.N + 1.0);
  const Complex t = pt.t, s = pt.s;
  const double p = spec.p;
  // Branch of the t+s term: the shifted argument must land in the phi strip.
  const Complex ts_arg =
      (pt.t.real() + pt.s.real() > 1.0) ? t + s + h - 1.0 : t + s + h;
  const Complex poly =
      kPi * kI *
      ((2.0 * p + 1.0) * s * s - (2.0 * p + 3.0) * s + (4.0 * h - 2.0) * t -
       (6.0 * p + 7.0) / 3.0 * h * h - 1.0 / 12.0);
  const Complex quantum = (phi(ts_arg) + phi(t - s + h) - phi(t) -
                           phi(t - h) - phi(t + h)) /
                          (spec.N + 0.5);
  return poly + quantum - kTwoPiI * (double(idx.m) * t + double(idx.n) * s);
}

Complex V_N_full(const KnotSpec& spec, double t, double s,
                 const FourierIndex& idx,
                 const std::function<Complex(double)>& phi) {
  spec.validate();
  const double h = 1.0 / (2.0 * spec.N + 1.0);
  const double p = spec.p;
  const double ts_arg = (t + s > 1.0) ? t + s + h - 1.0 : t + s + h;
  const Complex poly =
      kPi * kI *
      ((2.0 * p + 1.0) * s * s - (2.0 * p + 3.0) * s + (4.0 * h - 2.0) * t -
       (6.0 * p + 7.0) / 3.0 * h * h - 1.0 / 12.0);
  const Complex quantum = (phi(ts_arg) + phi(t - s + h) - phi(t) -
                           phi(t - h) - phi(t + h)) /
                          (spec.N + 0.5);
  return poly + quantum - kTwoPiI * (double(idx.m) * t + double(idx.n) * s);
}

// ---------------------------------------------------------------------------
// Derivatives
// ---------------------------------------------------------------------------

namespace {

Complex log1m(Complex z, const char* label) {
  const Complex w = 1.0 - z;
  if (std::abs(w) < 1e-14)
    throw DomainError(std::string("potential derivative: singular locus ") +
                      label);
  return principal_log(w);
}

}  // namespace

std::array<Complex, 2> grad_V(int p, const PotentialPoint& pt) {
  const Complex x = cis(pt.t), y = cis(pt.s);
  const Complex lx = log1m(x, "e^{2pi i t} = 1");
  const Complex lxy = log1m(x * y, "e^{2pi i (t+s)} = 1");
  const Complex lxy2 = log1m(x / y, "e^{2pi i (t-s)} = 1");
  const Complex dt = -kTwoPiI + 3.0 * lx - lxy - lxy2;
  const Complex ds = (4.0 * p + 2.0) * kPi * kI * pt.s -
                     (2.0 * p + 3.0) * kPi * kI - lxy + lxy2;
  return {dt, ds};
}

Hessian2 hess_V(int p, const PotentialPoint& pt) {
  const Complex x = cis(pt.t), y = cis(pt.s);
  auto ratio = [](Complex z, const char* label) {
    const Complex w = 1.0 - z;
    if (std::abs(w) < 1e-14)
      throw DomainError(std::string("hess_V: singular locus ") + label);
    return z / w;
  };
  const Complex rx = ratio(x, "e^{2pi i t} = 1");
  const Complex rxy = ratio(x * y, "e^{2pi i (t+s)} = 1");
  const Complex rxy2 = ratio(x / y, "e^{2pi i (t-s)} = 1");
  Hessian2 hv;
  hv.tt = kTwoPiI * (-3.0 * rx + rxy + rxy2);
  hv.ts = kTwoPiI * (rxy - rxy2);
  hv.ss = (4.0 * p + 2.0) * kPi * kI + kTwoPiI * (rxy + rxy2);
  return hv;
}

Complex H_of(int p, Complex x, Complex y) {
  auto inv = [](Complex z, const char* label) {
    if (std::abs(1.0 / z - 1.0) < 1e-14)
      throw DomainError(std::string("H_of: singular locus ") + label);
    return 1.0 / (1.0 / z - 1.0);
  };
  const Complex A = inv(x, "x = 1");      // 1/(1/x - 1)
  const Complex B = inv(x * y, "xy = 1");  // 1/(1/(xy) - 1)
  const Complex C = inv(x / y, "x/y = 1");
  const double q = 2.0 * p + 1.0;
  return -3.0 * q * A + q * B + q * C - 3.0 * A * B - 3.0 * A * C + 4.0 * B * C;
}

// ---------------------------------------------------------------------------
// f and F
// ---------------------------------------------------------------------------

double f_real(int p, double t, double X, double s, double Y,
              const FourierIndex& idx) {
  const PotentialPoint pt{Complex(t, X), Complex(s, Y)};
  return V_mn(p, pt, idx).real();
}

std::array<double, 3> f_hessian_XY(double t, double X, double s, double Y) {
  const Complex x = cis(Complex(t, X)), y = cis(Complex(s, Y));
  const double a = -(1.0 / (1.0 - x)).imag();
  const double b = (1.0 / (1.0 - x * y)).imag();
  const double c = (1.0 / (1.0 - x / y)).imag();
  const double two_pi = 2.0 * kPi;
  return {two_pi * (3.0 * a + b + c), two_pi * (b - c), two_pi * (b + c)};
}

double F_bound(int p, double t, double s, double X, double Y,
               const FourierIndex& idx) {
  double F = (p + 1.5 + idx.n - (2.0 * p + 1.0) * s) * Y + (idx.m + 1.0) * X;
  if (X + Y < 0.0) F += ((t + s) - 1.5) * (X + Y);
  if (X - Y < 0.0) F += ((t - s) - 0.5) * (X - Y);
  if (X < 0.0) F += (1.5 - 3.0 * t) * X;
  return F;
}

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

RegionSpec RegionSpec::region_D() { return {Name::D, 0, 0, 0.0}; }
RegionSpec RegionSpec::dprime0() { return {Name::Dprime0, 0, 0, 0.0}; }
RegionSpec RegionSpec::dprime_eps(double eps) {
  if (!(eps > 0.0)) throw DomainError("RegionSpec: eps must be positive");
  return {Name::DprimeEps, 0, 0, eps};
}
RegionSpec RegionSpec::ddoubleprime0(int p) {
  return {Name::Ddoubleprime0, p, 0, 0.0};
}
RegionSpec RegionSpec::d_H() { return {Name::D_H, 0, 0, 0.0}; }
RegionSpec RegionSpec::u(int n, int p) { return {Name::U, p, n, 0.0}; }

double c0_of(int p) {
  if (p < 2) throw DomainError("c0_of: requires p >= 2");
  if (p == 6) return 0.5871;  // tightened cap, see header comment
  return 7.0 / (8.0 * p) + 0.5;
}

namespace {

bool in_dprime(double t, double s, double eps) {
  return t - s >= 0.02 + eps && t - s <= 0.7 - eps && t + s >= 1.02 + eps &&
         t + s <= 1.7 - eps && s >= 0.2 + eps && s <= 0.8 - eps &&
         t >= 0.5 + eps && t <= 0.909 - eps;
}

}  // namespace

bool region_contains(const RegionSpec& r, double t, double s) {
  switch (r.name) {
    case RegionSpec::Name::D:
      return t + s > 1.0 && t + s < 2.0 && t - s > 0.0 && t - s < 1.0 &&
             t > 0.5 && t < 1.0;
    case RegionSpec::Name::Dprime0:
      return in_dprime(t, s, 0.0);
    case RegionSpec::Name::DprimeEps:
      return in_dprime(t, s, r.eps);
    case RegionSpec::Name::Ddoubleprime0: {
      const double c0 = c0_of(r.p);
      return in_dprime(t, s, 0.0) && s >= 1.0 - c0 && s <= c0;
    }
    case RegionSpec::Name::D_H:
      return t > 0.5 && t < 1.0 && t + s > 1.0 && t + s < 1.5 &&
             t - s > 0.0 && t - s < 0.5;
    case RegionSpec::Name::U: {
      const double p = r.p, n = r.n;
      return in_dprime(t, s, 0.0) &&
             s > (p + n + 1.0 - t) / (2.0 * p - 1.0) &&
             s < (p + n + t) / (2.0 * p - 1.0) &&
             s > (p + n + t) / (2.0 * p) && s < (p + 2.0 + n - t) / (2.0 * p);
    }
  }
  throw DomainError("region_contains: unknown region");
}

std::pair<Vertex, Vertex> u_vertices(int p, int n) {
  if (p < 1) throw DomainError("u_vertices: requires p >= 1");
  Vertex top, bottom;
  top.t = (3.0 * p - 2.0 - n) / (4.0 * p - 1.0);
  top.s = 0.5 + (5.0 + 4.0 * n) / (2.0 * (4.0 * p - 1.0));
  bottom.t = (3.0 * p + n) / (4.0 * p - 1.0);
  bottom.s = 0.5 + (3.0 + 4.0 * n) / (2.0 * (4.0 * p - 1.0));
  return {top, bottom};
}

// ---------------------------------------------------------------------------
// Bump function
// ---------------------------------------------------------------------------

namespace {

// C^infinity step: 0 for x <= 0, 1 for x >= 1, strictly increasing between.
double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double g0 = std::exp(-1.0 / x);
  const double g1 = std::exp(-1.0 / (1.0 - x));
  return g0 / (g0 + g1);
}

// 1 on [lo+eps, hi-eps], 0 outside [lo, hi], smooth ramps of width eps.
double window(double u, double lo, double hi, double eps) {
  return smoothstep((u - lo) / eps) * smoothstep((hi - u) / eps);
}

}  // namespace

double bump_psi(double t, double s, double eps) {
  if (!(eps > 0.0)) throw DomainError("bump_psi: eps must be positive");
  // The four constraint coordinates of D'_0, arranged so that s -> 1-s is a
  // bit-exact symmetry: the (t-s) and (t+s)-1 coordinates exchange and pass
  // through the same window, and the s window depends only on |s - 1/2|.
  return window(t - s, 0.02, 0.7, eps) * window((t + s) - 1.0, 0.02, 0.7, eps) *
         window(0.3 - std::abs(s - 0.5), 0.0, 0.6, eps) *
         window(t, 0.5, 0.909, eps);
}

double v_function(double t, double s) {
  return lobachevsky(t + s) + lobachevsky(t - s) - 3.0 * lobachevsky(t);
}

}  // namespace twistknot
