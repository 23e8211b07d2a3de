#include "twistknot/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace twistknot {

void NumericsConfig::validate() const {
  if (!(quad_abs_tol > 0) || !(quad_rel_tol > 0) || !(newton_tol > 0))
    throw DomainError("NumericsConfig: all tolerances must be positive");
  if (newton_max_iter < 1)
    throw DomainError("NumericsConfig: newton_max_iter must be >= 1");
  if (!(contour_radius > 0))
    throw DomainError("NumericsConfig: contour_radius must be positive");
}

Complex principal_log(Complex z) {
  if (z == Complex(0.0, 0.0)) throw DomainError("principal_log: log(0) undefined");
  // std::log uses atan2, whose range is [-pi, pi]; map the -pi edge to +pi so
  // that Im(log) lies in (-pi, pi].
  Complex r = std::log(z);
  if (r.imag() == -kPi) r = Complex(r.real(), kPi);
  return r;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes via Newton iteration on P_n (deterministic, cached)
// ---------------------------------------------------------------------------

static std::vector<std::pair<double, double>> compute_gl(int n) {
  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule[i] = {x, 2.0 / ((1.0 - x * x) * pp * pp)};
  }
  std::sort(rule.begin(), rule.end());
  return rule;
}

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// 1-D adaptive quadrature
// ---------------------------------------------------------------------------

namespace {

Complex gl_panel(const std::function<Complex(double)>& f, double a, double b,
                 int n, long& evals) {
  const auto& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Complex acc{0.0, 0.0};
  for (const auto& [x, w] : rule) acc += w * f(mid + half * x);
  evals += n;
  return half * acc;
}

// Recursive bisection; error of a panel is |GL15 - GL31|.
void adapt(const std::function<Complex(double)>& f, double a, double b,
           double tol, int depth, QuadResult& out) {
  Complex coarse = gl_panel(f, a, b, 15, out.evaluations);
  Complex fine = gl_panel(f, a, b, 31, out.evaluations);
  double err = std::abs(fine - coarse);
  // The roundoff floor: a panel cannot be resolved below a few ulps of its
  // own magnitude, whatever the requested tolerance. At the depth cap the
  // panel is accepted with its error recorded; integrate_adaptive checks the
  // accumulated total against the requested tolerance afterwards.
  const double floor_tol =
      std::max(tol, 5e-16 * std::max(std::abs(fine), std::abs(coarse)));
  if (err <= floor_tol || depth >= 28) {
    out.value += fine;
    out.est_error += err;
    return;
  }
  double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.7 * tol, depth + 1, out);
  adapt(f, mid, b, 0.7 * tol, depth + 1, out);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<Complex(double)>& f, double a,
                              double b, const NumericsConfig& cfg) {
  QuadResult out;
  if (a == b) return out;
  // First pass with the absolute tolerance; tighten against the relative
  // tolerance once a magnitude estimate exists.
  double tol = cfg.quad_abs_tol;
  adapt(f, a, b, tol, 0, out);
  double want = std::max(cfg.quad_abs_tol, cfg.quad_rel_tol * std::abs(out.value));
  if (out.est_error > want)
    throw QuadratureError("integrate_adaptive: tolerance not met", out.value,
                          out.est_error);
  return out;
}

// ---------------------------------------------------------------------------
// Contour integration
// ---------------------------------------------------------------------------

ContourPiece ContourPiece::segment(double a, double b) {
  return {Kind::Segment, a, b, 0.0};
}
ContourPiece ContourPiece::ray_positive(double from) {
  return {Kind::RayPositive, from, 0.0, 0.0};
}
ContourPiece ContourPiece::ray_negative(double from) {
  return {Kind::RayNegative, from, 0.0, 0.0};
}
ContourPiece ContourPiece::upper_semicircle(double radius) {
  return {Kind::UpperSemicircle, 0.0, 0.0, radius};
}

std::vector<ContourPiece> hook_contour(double radius) {
  return {ContourPiece::ray_negative(-radius),
          ContourPiece::upper_semicircle(radius),
          ContourPiece::ray_positive(radius)};
}

namespace {

// Integrate f over [from, +inf) (direction = +1) or (-inf, from] traversed
// from -inf (direction = -1), with geometrically growing panels truncated
// once the panel contribution falls below the cutoff twice in a row.
QuadResult integrate_ray(const std::function<Complex(Complex)>& f, double from,
                         int direction, const NumericsConfig& cfg) {
  QuadResult out;
  auto g = [&](double x) { return f(Complex(x, 0.0)); };
  double len = 1.0;
  double pos = from;
  const double cutoff = cfg.quad_abs_tol * 1e-2;
  int quiet = 0;
  for (int panel = 0; panel < 48; ++panel) {
    double a = pos, b = pos + direction * len;
    QuadResult piece;
    adapt(g, std::min(a, b), std::max(a, b), cutoff, 0, piece);
    out.value += static_cast<double>(direction) * piece.value;
    out.est_error += piece.est_error;
    out.evaluations += piece.evaluations;
    pos = b;
    len *= 2.0;
    if (std::abs(piece.value) < cutoff) {
      if (++quiet >= 2) return out;
    } else {
      quiet = 0;
    }
  }
  throw QuadratureError("integrate_contour: ray did not decay within budget",
                        out.value, out.est_error);
}

}  // namespace

QuadResult integrate_contour(const std::function<Complex(Complex)>& f,
                             const std::vector<ContourPiece>& pieces,
                             const NumericsConfig& cfg) {
  QuadResult total;
  for (const auto& piece : pieces) {
    switch (piece.kind) {
      case ContourPiece::Kind::Segment: {
        auto g = [&](double x) { return f(Complex(x, 0.0)); };
        QuadResult r = integrate_adaptive(g, piece.a, piece.b, cfg);
        total.value += r.value;
        total.est_error += r.est_error;
        total.evaluations += r.evaluations;
        break;
      }
      case ContourPiece::Kind::RayPositive: {
        QuadResult r = integrate_ray(f, piece.a, +1, cfg);
        total.value += r.value;
        total.est_error += r.est_error;
        total.evaluations += r.evaluations;
        break;
      }
      case ContourPiece::Kind::RayNegative: {
        // Traverse from -inf up to piece.a: integrate outward from piece.a
        // and flip the sign.
        QuadResult r = integrate_ray(f, piece.a, -1, cfg);
        total.value -= r.value;
        total.est_error += r.est_error;
        total.evaluations += r.evaluations;
        break;
      }
      case ContourPiece::Kind::UpperSemicircle: {
        // z = r e^{i theta}, theta from pi down to 0 (left to right).
        const double rad = piece.radius;
        auto g = [&](double theta) {
          Complex z = rad * std::exp(Complex(0.0, theta));
          return f(z) * (kI * z);
        };
        QuadResult r = integrate_adaptive(g, kPi, 0.0, cfg);
        total.value += r.value;
        total.est_error += r.est_error;
        total.evaluations += r.evaluations;
        break;
      }
    }
  }
  return total;
}

QuadResult integrate_rect2d(const std::function<Complex(double, double)>& f,
                            double ax, double bx, double ay, double by,
                            double tol) {
  if (!(tol > 0)) throw DomainError("integrate_rect2d: tol must be positive");
  QuadResult out;
  const int order = 12;
  const auto& rule = gauss_legendre(order);
  Complex prev{0.0, 0.0};
  bool have_prev = false;
  for (int panels = 1; panels <= 64; panels *= 2) {
    Complex acc{0.0, 0.0};
    const double hx = (bx - ax) / panels, hy = (by - ay) / panels;
    for (int i = 0; i < panels; ++i) {
      for (int j = 0; j < panels; ++j) {
        const double cx = ax + (i + 0.5) * hx, cy = ay + (j + 0.5) * hy;
        Complex cell{0.0, 0.0};
        for (const auto& [xn, xw] : rule)
          for (const auto& [yn, yw] : rule)
            cell += xw * yw * f(cx + 0.5 * hx * xn, cy + 0.5 * hy * yn);
        acc += cell * (0.25 * hx * hy);
        out.evaluations += order * order;
      }
    }
    if (have_prev) {
      double err = std::abs(acc - prev);
      if (err <= tol) {
        out.value = acc;
        out.est_error = err;
        return out;
      }
    }
    prev = acc;
    have_prev = true;
  }
  throw QuadratureError("integrate_rect2d: refinement budget exhausted", prev,
                        std::abs(prev));
}

// ---------------------------------------------------------------------------
// Damped Newton
// ---------------------------------------------------------------------------

namespace {

double norm2(const std::array<Complex, 2>& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

}  // namespace

Newton2dResult newton_solve_2d(const Fn2d& F, const Jac2d& J, Complex z1,
                               Complex z2, const NumericsConfig& cfg) {
  cfg.validate();
  std::array<Complex, 2> Fv = F(z1, z2);
  double res = norm2(Fv);
  for (int iter = 0; iter < cfg.newton_max_iter; ++iter) {
    if (res <= cfg.newton_tol) return {z1, z2, iter, res};
    std::array<Complex, 4> Jm = J(z1, z2);
    Complex det = Jm[0] * Jm[3] - Jm[1] * Jm[2];
    if (std::abs(det) < 1e-300)
      throw SolverError("newton_solve_2d: singular Jacobian", z1, z2, res);
    // Cramer's rule for J * delta = -F.
    Complex d1 = (-Fv[0] * Jm[3] + Fv[1] * Jm[1]) / det;
    Complex d2 = (-Fv[1] * Jm[0] + Fv[0] * Jm[2]) / det;
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 20; ++halving) {
      Complex n1 = z1 + lambda * d1, n2 = z2 + lambda * d2;
      std::array<Complex, 2> Fn = F(n1, n2);
      double rn = norm2(Fn);
      if (rn < res) {
        z1 = n1;
        z2 = n2;
        Fv = Fn;
        res = rn;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw SolverError("newton_solve_2d: no descent after 20 halvings", z1, z2,
                        res);
  }
  if (res <= cfg.newton_tol)
    return {z1, z2, cfg.newton_max_iter, res};
  throw SolverError("newton_solve_2d: max iterations reached", z1, z2, res);
}

}  // namespace twistknot
