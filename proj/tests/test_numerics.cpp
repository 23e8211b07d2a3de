#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistknot/numerics.hpp"

#include <cmath>

using namespace twistknot;

TEST_CASE("config validation rejects nonsense") {
  NumericsConfig cfg;
  cfg.quad_abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = NumericsConfig();
  cfg.newton_max_iter = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("principal log lands on (-pi, pi]") {
  CHECK(principal_log(Complex(-1.0, 0.0)).imag() == doctest::Approx(kPi));
  CHECK(principal_log(Complex(2.0, 0.0)).real() ==
        doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(principal_log(Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {5, 15, 31}) {
    const auto& rule = gauss_legendre(n);
    REQUIRE(int(rule.size()) == n);
    double s0 = 0.0, s2 = 0.0;
    for (const auto& [x, w] : rule) {
      s0 += w;
      s2 += w * x * x;
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("adaptive quadrature on smooth and peaked integrands") {
  NumericsConfig cfg;
  auto r = integrate_adaptive([](double x) { return Complex(std::exp(x), 0.0); },
                              0.0, 1.0, cfg);
  CHECK(std::abs(r.value - Complex(std::exp(1.0) - 1.0, 0.0)) < 1e-12);

  // Oscillatory: int_0^1 sin(50 x) dx = (1 - cos 50)/50.
  r = integrate_adaptive([](double x) { return Complex(std::sin(50.0 * x), 0.0); },
                         0.0, 1.0, cfg);
  CHECK(std::abs(r.value.real() - (1.0 - std::cos(50.0)) / 50.0) < 1e-12);

  // Sharp peak forcing deep bisection: int exp(-1000 (x-0.3)^2) dx over [0,1].
  r = integrate_adaptive(
      [](double x) {
        return Complex(std::exp(-1000.0 * (x - 0.3) * (x - 0.3)), 0.0);
      },
      0.0, 1.0, cfg);
  CHECK(std::abs(r.value.real() - std::sqrt(kPi / 1000.0)) < 1e-11);
}

TEST_CASE("contour quadrature reproduces the Gaussian integral") {
  NumericsConfig cfg;
  // e^{-z^2} is entire, so the hook path gives the real-line integral sqrt(pi).
  auto r = integrate_contour([](Complex z) { return std::exp(-z * z); },
                             hook_contour(1.0), cfg);
  CHECK(std::abs(r.value - Complex(std::sqrt(kPi), 0.0)) < 1e-10);
}

TEST_CASE("2-D tensor quadrature") {
  auto r = integrate_rect2d(
      [](double x, double y) { return Complex(std::sin(x) * std::cos(y), 0.0); },
      0.0, 1.0, 0.0, 2.0, 1e-12);
  const double exact = (1.0 - std::cos(1.0)) * std::sin(2.0);
  CHECK(std::abs(r.value.real() - exact) < 1e-10);
}

TEST_CASE("damped Newton solves a decoupled system") {
  NumericsConfig cfg;
  Fn2d F = [](Complex z, Complex w) {
    return std::array<Complex, 2>{z * z - 1.0, w * w * w - 8.0};
  };
  Jac2d J = [](Complex z, Complex w) {
    return std::array<Complex, 4>{2.0 * z, 0.0, 0.0, 3.0 * w * w};
  };
  auto sol = newton_solve_2d(F, J, Complex(0.3, 0.1), Complex(1.0, 1.0), cfg);
  CHECK(std::abs(sol.z1 - Complex(1.0, 0.0)) < 1e-10);
  CHECK(std::abs(sol.z2 - Complex(2.0, 0.0)) < 1e-10);
  CHECK(sol.residual <= cfg.newton_tol);
}
