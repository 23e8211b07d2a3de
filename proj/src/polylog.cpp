#include "twistknot/polylog.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace twistknot {

// ---------------------------------------------------------------------------
// Root of unity and brackets
// ---------------------------------------------------------------------------

RootOfUnity RootOfUnity::make(int N) {
  if (N < 1) throw DomainError("RootOfUnity: N must be a positive integer");
  RootOfUnity ru;
  ru.N = N;
  ru.xi = std::exp(Complex(0.0, 4.0 * kPi / (2 * N + 1)));
  return ru;
}

Complex bracket(const RootOfUnity& ru, long n) {
  // q^{n/2} - q^{-n/2} = 2 i sin(2 pi n/(2N+1)) at q = xi_N.
  return Complex(0.0, 2.0 * std::sin(2.0 * kPi * n / ru.order()));
}

Complex bracket_factorial(const RootOfUnity& ru, long n) {
  Complex acc{1.0, 0.0};
  for (long j = 1; j <= n; ++j) acc *= bracket(ru, j);
  return acc;
}

Complex q_pochhammer(const RootOfUnity& ru, int n) {
  if (n < 0 || n > 2 * ru.N)
    throw DomainError("q_pochhammer: n must satisfy 0 <= n <= 2N");
  Complex acc{1.0, 0.0};
  Complex qi{1.0, 0.0};
  for (int i = 1; i <= n; ++i) {
    qi *= ru.xi;
    acc *= (Complex(1.0, 0.0) - qi);
  }
  return acc;
}

Complex q_pochhammer_via_phi(const RootOfUnity& ru, int n,
                             const NumericsConfig& cfg) {
  if (n < 0 || n > 2 * ru.N)
    throw DomainError("q_pochhammer_via_phi: n must satisfy 0 <= n <= 2N");
  const double h = 1.0 / ru.order();
  const Complex phi_h = phi_N(ru, Complex(h, 0.0), cfg);
  const double arg = (2.0 * n + 1.0) * h;
  if (n <= ru.N)
    return std::exp(phi_h - phi_N(ru, Complex(arg, 0.0), cfg));
  return std::exp(phi_h - phi_N(ru, Complex(arg - 1.0, 0.0), cfg) +
                  std::log(2.0));
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

namespace {

constexpr double kPi2Over6 = kPi * kPi / 6.0;

// Base-region evaluation for |z| <= 1, Re z <= 1/2: the series in
// u = -log(1-z), Li2 = u - u^2/4 + sum_k c_k u^{2k+1} with
// c_k = B_{2k}/(2k+1)!.
Complex li2_base(Complex z) {
  static const double kCoeff[] = {
      2.77777777777777777778e-2,   // B_2/3!
      -2.77777777777777777778e-4,  // B_4/5!
      4.72411186696900982615e-6,   // B_6/7!
      -9.18577307466196355085e-8,  // B_8/9!
      1.89788699889709990720e-9,   // B_10/11!
      -4.06476164514422552681e-11, // B_12/13!
      8.92169102045645255522e-13,  // B_14/15!
      -1.99392958607210756872e-14, // B_16/17!
      4.51898002961991819165e-16,  // B_18/19!
      -1.03565176121812470145e-17, // B_20/21!
      2.39521862102618674574e-19,  // B_22/23!
      -5.58178587432500933628e-21, // B_24/25!
  };
  const Complex u = -std::log(Complex(1.0, 0.0) - z);
  const Complex u2 = u * u;
  Complex term = u * u2;  // u^3
  Complex acc = u - 0.25 * u2;
  for (double c : kCoeff) {
    acc += c * term;
    term *= u2;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

}  // namespace

Complex li2(Complex z) {
  if (z.imag() == 0.0 && z.real() > 1.0)
    throw BranchError("li2: argument on the branch cut (1, inf)");
  if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
  if (z == Complex(1.0, 0.0)) return {kPi2Over6, 0.0};

  const double az = std::abs(z);
  if (az > 1.0) {
    // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - (1/2) log(-z)^2.
    const Complex lnz = principal_log(-z);
    return -li2(1.0 / z) - kPi2Over6 - 0.5 * lnz * lnz;
  }
  if (z.real() > 0.5) {
    // Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
    return kPi2Over6 - principal_log(z) * principal_log(1.0 - z) -
           li2(Complex(1.0, 0.0) - z);
  }
  return li2_base(z);
}

// ---------------------------------------------------------------------------
// Lobachevsky function
// ---------------------------------------------------------------------------

namespace {

// Smooth part of log(2 sin(pi u)) after the log(2 pi u) singularity at the
// origin is split off: g(u) = log(sin(pi u)/(pi u)); analytic on |u| < 1.
double lob_smooth_integrand(double u) {
  const double x = kPi * u;
  if (std::abs(x) < 1e-6) return -x * x / 6.0;  // series head of log(sinc)
  return std::log(std::sin(x) / x);
}

// A(t) = Lob(t) + t log(2 pi t) - t = -int_0^t g(u) du, interpolated by a
// single Chebyshev expansion on [0, 0.55] (A is analytic well beyond).
struct LobTable {
  static constexpr int kDegree = 60;
  static constexpr double kHi = 0.55;
  std::array<double, kDegree + 1> coeff{};

  LobTable() {
    const auto& rule = gauss_legendre(64);
    auto A = [&](double t) {
      if (t <= 0.0) return 0.0;
      double acc = 0.0;
      for (const auto& [x, w] : rule)
        acc += w * lob_smooth_integrand(0.5 * t * (x + 1.0));
      return -0.5 * t * acc;
    };
    // Chebyshev fit of A on [0, kHi].
    std::array<double, kDegree + 1> fvals{};
    for (int k = 0; k <= kDegree; ++k) {
      double xk = std::cos(kPi * (k + 0.5) / (kDegree + 1));  // in [-1,1]
      fvals[k] = A(0.5 * kHi * (xk + 1.0));
    }
    for (int j = 0; j <= kDegree; ++j) {
      double s = 0.0;
      for (int k = 0; k <= kDegree; ++k)
        s += fvals[k] * std::cos(kPi * j * (k + 0.5) / (kDegree + 1));
      coeff[j] = 2.0 / (kDegree + 1) * s;
    }
    coeff[0] *= 0.5;
  }

  double eval(double t) const {
    // Clenshaw recurrence on [0, kHi].
    const double x = 2.0 * t / kHi - 1.0;
    double b1 = 0.0, b2 = 0.0;
    for (int j = kDegree; j >= 1; --j) {
      double b0 = 2.0 * x * b1 - b2 + coeff[j];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + coeff[0];
  }
};

}  // namespace

double lobachevsky(double t) {
  static const LobTable table;
  // Reduce by period 1 into [-1/2, 1/2), then use oddness.
  double r = t - std::floor(t + 0.5);
  if (r == 0.0 || r == -0.5) return r == 0.0 ? 0.0 : 0.0;
  const double sign = r < 0.0 ? -1.0 : 1.0;
  const double a = std::abs(r);
  // Lob(a) = -a log(2 pi a) + a + A(a) for a in (0, 1/2].
  return sign * (-a * std::log(2.0 * kPi * a) + a + table.eval(a));
}

// ---------------------------------------------------------------------------
// Quantum dilogarithm
// ---------------------------------------------------------------------------

namespace {

void check_phi_domain(Complex t) {
  // The contour integral converges for -1/(2(2N+1)) < Re t < 1 + 1/(2(2N+1));
  // we admit the closed interval [0, 1] that the lattice arguments need.
  if (t.real() < -1e-12 || t.real() > 1.0 + 1e-12)
    throw DomainError("phi_N: Re(t) must lie in [0, 1], got Re(t) = " +
                      std::to_string(t.real()));
}

// e^{w x} / (sinh(x) sinh(x/half)) without overflow: for large real |x| the
// sinh factors individually overflow while the ratio decays, so pull their
// dominant exponentials into the exp argument. The two sinh signs cancel.
Complex exp_over_sinhs(Complex w, double half, Complex x) {
  if (x.imag() == 0.0 && std::abs(x.real()) > 20.0) {
    const double ax = std::abs(x.real());
    const Complex expo = w * x - Complex(ax + ax / half, 0.0);
    const double corr =
        (1.0 - std::exp(-2.0 * ax)) * (1.0 - std::exp(-2.0 * ax / half));
    return std::exp(expo) * (4.0 / corr);
  }
  return std::exp(w * x) / (std::sinh(x) * std::sinh(x / half));
}

Complex phi_integrand(Complex t, double half, Complex x) {
  return exp_over_sinhs(2.0 * t - 1.0, half, x) / (4.0 * x);
}

}  // namespace

Complex phi_N(const RootOfUnity& ru, Complex t, const NumericsConfig& cfg) {
  check_phi_domain(t);
  const double half = ru.half();
  auto f = [&](Complex x) { return phi_integrand(t, half, x); };
  return integrate_contour(f, hook_contour(cfg.contour_radius), cfg).value;
}

Complex phi_N_deriv(const RootOfUnity& ru, Complex t,
                    const NumericsConfig& cfg) {
  check_phi_domain(t);
  const double half = ru.half();
  auto f = [&](Complex x) {
    return exp_over_sinhs(2.0 * t - 1.0, half, x) / 2.0;
  };
  return integrate_contour(f, hook_contour(cfg.contour_radius), cfg).value;
}

Complex phi_reflection_rhs(const RootOfUnity& ru, Complex t) {
  const double m = 2.0 * ru.N + 1.0;
  return kTwoPiI *
         (-(m / 4.0) * (t * t - t + 1.0 / 6.0) + 1.0 / (12.0 * m));
}

Complex phi_at_first_lattice(const RootOfUnity& ru) {
  const double m = 2.0 * ru.N + 1.0;
  return m / (4.0 * kPi * kI) * (kPi * kPi / 6.0) +
         0.5 * std::log(m / 2.0) + kPi * kI / 4.0 -
         kPi * kI / (6.0 * m);
}

// ---------------------------------------------------------------------------
// Piecewise-Chebyshev interpolant of phi_N
// ---------------------------------------------------------------------------

PhiInterpolant::PhiInterpolant(const RootOfUnity& ru, double lo, double hi,
                               double tol, const NumericsConfig& cfg)
    : lo_(lo), hi_(hi) {
  if (!(lo < hi)) throw DomainError("PhiInterpolant: need lo < hi");
  if (lo < 0.0 || hi > 1.0)
    throw DomainError("PhiInterpolant: interval must lie inside [0, 1]");
  build(ru, lo, hi, tol, cfg, 0);
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });
}

void PhiInterpolant::build(const RootOfUnity& ru, double a, double b,
                           double tol, const NumericsConfig& cfg, int depth) {
  constexpr int kDeg = 32;
  std::array<Complex, kDeg + 1> fvals;
  for (int k = 0; k <= kDeg; ++k) {
    double xk = std::cos(kPi * (k + 0.5) / (kDeg + 1));
    double t = 0.5 * (a + b) + 0.5 * (b - a) * xk;
    fvals[k] = phi_N(ru, Complex(t, 0.0), cfg);
  }
  std::vector<Complex> coeff(kDeg + 1);
  double scale = 0.0;
  for (int j = 0; j <= kDeg; ++j) {
    Complex s{0.0, 0.0};
    for (int k = 0; k <= kDeg; ++k)
      s += fvals[k] * std::cos(kPi * j * (k + 0.5) / (kDeg + 1));
    coeff[j] = 2.0 / (kDeg + 1) * s;
    scale = std::max(scale, std::abs(coeff[j]));
  }
  coeff[0] *= 0.5;
  // Tail of the Chebyshev expansion estimates the interpolation error.
  double tail = 0.0;
  for (int j = kDeg - 3; j <= kDeg; ++j) tail += std::abs(coeff[j]);
  if (tail > tol * std::max(1.0, scale) && depth < 12) {
    double mid = 0.5 * (a + b);
    build(ru, a, mid, tol, cfg, depth + 1);
    build(ru, mid, b, tol, cfg, depth + 1);
    return;
  }
  pieces_.push_back({a, b, std::move(coeff)});
}

Complex PhiInterpolant::operator()(double x) const {
  if (x < lo_ - 1e-12 || x > hi_ + 1e-12)
    throw DomainError("PhiInterpolant: argument outside interpolation range");
  // Binary search for the covering piece.
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), x,
      [](double v, const Piece& p) { return v < p.a; });
  if (it != pieces_.begin()) --it;
  const Piece& p = *it;
  const double u = std::clamp(2.0 * (x - p.a) / (p.b - p.a) - 1.0, -1.0, 1.0);
  Complex b1{0.0, 0.0}, b2{0.0, 0.0};
  for (size_t j = p.coeff.size() - 1; j >= 1; --j) {
    Complex b0 = 2.0 * u * b1 - b2 + p.coeff[j];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + p.coeff[0];
}

}  // namespace twistknot
