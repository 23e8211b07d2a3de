// Acceptance suite: twelve end-to-end criteria, one pass/fail line each.
// The binary always exits 0; the printed report is the deliverable. Each
// criterion states its measured numbers so a failure is diagnosable from the
// log alone.

#include "twistknot/asympt.hpp"
#include "twistknot/fourier.hpp"
#include "twistknot/geometry.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace twistknot;

namespace {

int g_pass = 0, g_fail = 0;

void report(int idx, bool pass, const std::string& detail) {
  std::printf("criterion %02d: %s  %s\n", idx, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  (pass ? g_pass : g_fail)++;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Deterministic low-discrepancy sequence on [0, 1).
double ld1(int k) { return std::fmod(0.6180339887498949 * (k + 1), 1.0); }
double ld2(int k) { return std::fmod(0.4142135623730951 * (k + 1), 1.0); }

// --------------------------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const CriticalData cd = solve_critical(100);
  const double elapsed = seconds_since(t0);
  const double worst = std::max(
      {std::abs(cd.t0 - Complex(0.8237997818, -0.1280592525)),
       std::abs(cd.s0 - Complex(0.5050124998, -0.00001256317546))});
  const double worst5 = std::max(
      {std::abs(cd.x0 - Complex(1.000001243, -1.999752031)),
       std::abs(cd.y0 - Complex(-0.9995829910, -0.03149174478)),
       std::abs(2.0 * kPi * cd.zeta - Complex(3.6636144, -1043.809608))});
  const bool pass = worst < 1e-6 && worst5 < 1e-5 && elapsed < 1.0;
  report(1, pass,
         fmt("p=100 reference digits: |d(t0,s0)|=%.2e |d(x0,y0,2pz)|=%.2e "
             "t=%.2fs",
             worst, worst5, elapsed));
}

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const double val = 2.0 * kPi * solve_critical(6).zeta_R;
  const double elapsed = seconds_since(t0);
  const bool pass = std::abs(val - 3.5889) <= 5e-4 && elapsed < 1.0;
  report(2, pass, fmt("2*pi*zeta_R(6) = %.6f (ref 3.5889 +- 5e-4) t=%.2fs",
                      val, elapsed));
}

void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  NumericsConfig cfg;
  double worst = 0.0;
  for (int p : {6, 7, 8}) {
    for (int N : {3, 5, 8, 12}) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < N; ++k)
        for (int l = 0; l <= k; ++l) acc += g_term(KnotSpec{p, N}, k, l, cfg);
      const Complex exact = jones_exact(KnotSpec{p, N}).value;
      worst = std::max(worst, std::abs(acc - exact) / std::abs(exact));
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst <= 1e-7 && elapsed < 30.0;
  report(3, pass,
         fmt("term representation vs exact: worst rel=%.2e t=%.1fs", worst,
             elapsed));
}

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  NumericsConfig cfg;
  double worst_bridge = 0.0;
  for (int N = 1; N <= 20; ++N) {
    const RootOfUnity ru = RootOfUnity::make(N);
    for (int n = 0; n <= 2 * N; ++n)
      worst_bridge = std::max(worst_bridge,
                              std::abs(q_pochhammer(ru, n) -
                                       q_pochhammer_via_phi(ru, n, cfg)));
  }

  double worst_refl = 0.0;
  const RootOfUnity ru9 = RootOfUnity::make(9);
  for (int k = 0; k < 50; ++k) {
    const Complex t(0.02 + 0.96 * ld1(k), 0.3 * ld2(k) - 0.15);
    const Complex lhs = phi_N(ru9, t, cfg) + phi_N(ru9, 1.0 - t, cfg);
    worst_refl = std::max(worst_refl, std::abs(lhs - phi_reflection_rhs(ru9, t)));
  }

  // Cubic-rate check: the remainder of the two-term expansion of phi at a
  // fixed interior point shrinks like (N+1/2)^-3.
  auto remainder = [&](int N) {
    const RootOfUnity ru = RootOfUnity::make(N);
    const Complex t(0.3, 0.05);
    const Complex ex = std::exp(kTwoPiI * t);
    const Complex model = (N + 0.5) / kTwoPiI * li2(ex) -
                          kPi * kI * ex / (6.0 * (1.0 - ex)) /
                              (2.0 * N + 1.0);
    return std::abs(phi_N(ru, t, cfg) - model);
  };
  const double r25 = remainder(25), r50 = remainder(50), r100 = remainder(100);
  const double q1 = r25 / r50, q2 = r50 / r100;
  const double cube1 = std::pow(50.5 / 25.5, 3.0);
  const double cube2 = std::pow(100.5 / 50.5, 3.0);
  const bool cubic_ok = q1 > cube1 / 2.0 && q1 < cube1 * 2.0 &&
                        q2 > cube2 / 2.0 && q2 < cube2 * 2.0;

  const double elapsed = seconds_since(t0);
  const bool pass =
      worst_bridge <= 1e-8 && worst_refl <= 1e-10 && cubic_ok && elapsed < 60.0;
  report(4, pass,
         fmt("bridge=%.2e reflection=%.2e cubic ratios %.2f/%.2f",
             worst_bridge, worst_refl, q1, q2) +
             fmt(" (expect %.2f/%.2f) t=", cube1, cube2) +
             fmt("%.1fs", elapsed));
}

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_re = 0.0, worst_residue = 0.0;
  for (int p = 6; p <= 20; ++p) {
    const CriticalData cd = solve_critical(p);
    const GluingSolution gs = solve_gluing(p);
    worst_re = std::max(worst_re,
                        std::abs(2.0 * kPi * cd.zeta_R - gs.volcs.real()));
    const double frac = std::remainder(
        gs.volcs.imag() - 2.0 * kPi * cd.zeta.imag(), kPi * kPi);
    worst_residue = std::max(worst_residue, std::abs(frac));
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst_re <= 1e-8 && worst_residue <= 1e-8 && elapsed < 10.0;
  report(5, pass,
         fmt("volume channel p=6..20: |dRe|=%.2e residue=%.2e t=%.1fs",
             worst_re, worst_residue, elapsed));
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  long violations = 0;
  double worst_margin = 1e9;
  for (int p = 6; p <= 1000; ++p) {
    const double lhs = 2.0 * kPi * solve_critical(p).zeta_R;
    const double rhs = 8.0 * kPi * lobachevsky(0.25) -
                       (49.0 * kPi * kPi / 64.0) / (double(p) * p);
    worst_margin = std::min(worst_margin, lhs - rhs);
    if (lhs < rhs) ++violations;
  }
  const double elapsed = seconds_since(t0);
  const bool pass = violations == 0 && elapsed < 300.0;
  report(6, pass,
         fmt("volume inequality p=6..1000: violations=%.0f min margin=%.2e "
             "t=%.1fs",
             double(violations), worst_margin, elapsed));
}

void criterion_7() {
  std::vector<double> K;
  for (int p : {50, 100, 200, 400}) {
    const double gap =
        std::abs(2.0 * kPi * solve_critical(p).zeta_R - zeta_R_series(p));
    K.push_back(gap * std::pow(double(p), 5.0));
  }
  double kmin = K[0], kmax = K[0];
  for (double k : K) {
    kmin = std::min(kmin, k);
    kmax = std::max(kmax, k);
  }
  const bool pass = kmax / kmin <= 2.0;
  report(7, pass,
         fmt("series remainder K=p^5*|gap| in [%.3g, %.3g], spread %.2fx",
             kmin, kmax, kmax / kmin));
}

void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  NumericsConfig cfg;
  cfg.precision_mode = PrecisionMode::Extended;
  const auto rows = convergence_experiment(6, {50, 100, 200}, cfg);
  const double g50 = std::abs(rows[0].gap), g100 = std::abs(rows[1].gap),
               g200 = std::abs(rows[2].gap);
  const double elapsed = seconds_since(t0);
  const bool pass = g100 < g50 && g200 < g100 && g200 <= 0.15 &&
                    g200 < 0.7 * g50 && elapsed < 120.0;
  report(8, pass,
         fmt("volume limit gaps |%.4f| > |%.4f| > |%.4f|", g50, g100, g200) +
             fmt(" (need last <= 0.15 and < %.4f) t=", 0.7 * g50) +
             fmt("%.1fs", elapsed));
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  NumericsConfig cfg;
  bool pass = true;
  std::string detail;
  for (int p : {6, 10}) {
    const AsymptoticModel base = make_model(p, cfg);
    double C = 0.0;
    bool phase_ok = true, bound_ok = true;
    double first = 0.0;
    for (int N : {50, 100, 200}) {
      const Complex r = ratio_rN(base, N, cfg);
      const double scaled = N * std::abs(r - 1.0);
      if (N == 50) first = scaled;
      // A single constant C works across the samples when the scaled gap
      // does not grow; allow 1.5x drift above the first sample.
      if (scaled > 1.5 * first) bound_ok = false;
      C = std::max(C, scaled);
      if (std::abs(std::arg(r)) > kPi / N) phase_ok = false;
    }
    const AsymptoticModel fitted = fit_kappas(p, {40, 55, 75, 100, 135}, 1, cfg);
    const double held_base = std::abs(ratio_rN(base, 200, cfg) - 1.0);
    const double held_fit = std::abs(ratio_rN(fitted, 200, cfg) - 1.0);
    const double improvement = held_base / held_fit;
    const bool p_ok = bound_ok && phase_ok && improvement >= 3.0;
    pass = pass && p_ok;
    detail += fmt("p=%.0f: C=%.1f", double(p), C) +
              fmt(" phase_lock=%.0f", phase_ok ? 1.0 : 0.0) +
              fmt(" fit_gain=%.1fx; ", improvement);
  }
  detail += fmt("t=%.1fs", seconds_since(t0));
  report(9, pass, detail);
}

void criterion_10() {
  const auto t0 = std::chrono::steady_clock::now();

  // Pointwise symmetry of the integrand on an interior grid.
  const FourierEngine engine(KnotSpec{6, 15});
  double worst_sym = 0.0;
  for (int m : {-1, 0, 1}) {
    for (int n : {-2, -1, 0, 1}) {
      const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
      // Dyadic grid so the mirror point 1 - s is exact in binary; the
      // deviation is normalized by the integrand's scale over the grid.
      double gap = 0.0, scale = 0.0;
      for (double t = 0.53125; t < 0.909; t += 0.03125) {
        for (double s = 0.21875; s < 0.79; s += 0.03125) {
          if (!(t - s >= 0.03 && t - s <= 0.69 && t + s >= 1.03 &&
                t + s <= 1.69 && s >= 0.21 && s <= 0.79))
            continue;
          const Complex lhs = engine.integrand(FourierIndex{m, n}, t, 1.0 - s);
          const Complex rhs = sgn * engine.integrand(FourierIndex{m, -n - 2}, t, s);
          gap = std::max(gap, std::abs(lhs - rhs));
          scale = std::max(scale, std::max(std::abs(lhs), std::abs(rhs)));
        }
      }
      worst_sym = std::max(worst_sym, gap / scale);
    }
  }

  const FourierCoefficient h0m1 = engine.hhat(FourierIndex{0, -1});
  const FourierCoefficient h00 = engine.hhat(FourierIndex{0, 0});
  const FourierCoefficient h0m2 = engine.hhat(FourierIndex{0, -2});
  const bool vanish_ok = std::abs(h0m1.value) <= h0m1.quad_error;
  const bool mirror_ok = std::abs(h0m2.value - h00.value) <=
                         2.0 * (h00.quad_error + h0m2.quad_error);

  const Complex J15 = jones_exact(KnotSpec{6, 15}).value;
  const double dom15 = std::abs(J15 - 2.0 * h00.value) / std::abs(J15);

  std::vector<double> dom;
  for (int N : {8, 12, 16}) {
    const Complex h = hhat(KnotSpec{6, N}, FourierIndex{0, 0}).value;
    const Complex J = jones_exact(KnotSpec{6, N}).value;
    dom.push_back(std::abs(J - 2.0 * h) / std::abs(J));
  }
  const bool dom_ok = dom15 <= 0.05 && dom[1] < dom[0] && dom[2] < dom[1];

  const double elapsed = seconds_since(t0);
  const bool pass = worst_sym <= 1e-12 && vanish_ok && mirror_ok && dom_ok &&
                    elapsed < 300.0;
  report(10, pass,
         fmt("symmetry=%.1e vanish=%.0f mirror=%.0f", worst_sym,
             vanish_ok ? 1.0 : 0.0, mirror_ok ? 1.0 : 0.0) +
             fmt(" dominance@15=%.3f seq=%.2f/", dom15, dom[0]) +
             fmt("%.2f/%.2f ", dom[1], dom[2]) + fmt("t=%.0fs", elapsed));
}

void criterion_11() {
  const auto t0 = std::chrono::steady_clock::now();

  const double threshold = 3.509 / (2.0 * kPi);
  const int G = 2000;
  long violations = 0;
  for (int i = 0; i < G; ++i) {
    const double t = 0.5 + (0.5 * (i + 0.5)) / G;
    for (int j = 0; j < G; ++j) {
      const double s = (1.0 * (j + 0.5)) / G;
      if (!region_contains(RegionSpec::region_D(), t, s)) continue;
      if (v_function(t, s) > threshold &&
          !region_contains(RegionSpec::dprime0(), t, s))
        ++violations;
    }
  }

  double worst_vertex = 0.0;
  for (int p = 6; p <= 20; ++p) {
    for (int n = -2; n <= 2; ++n) {
      const auto [top, bot] = u_vertices(p, n);
      worst_vertex = std::max(
          {worst_vertex, std::abs(top.s - (p + n + top.t) / (2.0 * p - 1.0)),
           std::abs(top.s - (p + 2.0 + n - top.t) / (2.0 * p)),
           std::abs(bot.s - (p + n + 1.0 - bot.t) / (2.0 * p - 1.0)),
           std::abs(bot.s - (p + n + bot.t) / (2.0 * p))});
    }
  }

  int inclusion_failures = 0;
  std::string bad_ps;
  for (int p = 6; p <= 20; ++p) {
    bool ok = true;
    const int GG = 500;
    for (int i = 0; i < GG && ok; ++i) {
      const double t = 0.5 + (0.5 * (i + 0.5)) / GG;
      for (int j = 0; j < GG && ok; ++j) {
        const double s = (1.0 * (j + 0.5)) / GG;
        if (region_contains(RegionSpec::u(0, p), t, s) &&
            !region_contains(RegionSpec::ddoubleprime0(p), t, s))
          ok = false;
        if (region_contains(RegionSpec::ddoubleprime0(p), t, s) &&
            !region_contains(RegionSpec::d_H(), t, s))
          ok = false;
      }
    }
    if (!ok) {
      ++inclusion_failures;
      bad_ps += std::to_string(p) + " ";
    }
  }

  const double elapsed = seconds_since(t0);
  const bool pass = violations == 0 && worst_vertex <= 1e-15 &&
                    inclusion_failures == 0 && elapsed < 30.0;
  report(11, pass,
         fmt("grid violations=%.0f vertex=%.1e inclusion failures=%.0f",
             double(violations), worst_vertex, double(inclusion_failures)) +
             (bad_ps.empty() ? "" : "(p=" + bad_ps + ")") +
             fmt(" t=%.1fs", elapsed));
}

void criterion_12() {
  const auto t0 = std::chrono::steady_clock::now();

  double worst_det = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Complex t(0.55 + 0.4 * ld1(k), 0.1 * ld2(k) - 0.05);
    const Complex s(0.3 + 0.4 * ld2(k), 0.1 * ld1(k) - 0.05);
    const PotentialPoint pt{t, s};
    const Complex lhs = hess_V(7, pt).det();
    const Complex rhs =
        kTwoPiI * kTwoPiI * H_of(7, std::exp(kTwoPiI * t), std::exp(kTwoPiI * s));
    worst_det = std::max(worst_det, std::abs(lhs - rhs));
  }

  // 4x4 real Hessian of f = Re V versus |det Hess V|^2, built from the
  // closed-form complex Hessian blocks and evaluated by elimination.
  double worst_bridge = 0.0;
  bool positive_ok = true;
  for (int k = 0; k < 50; ++k) {
    const double tr = 0.55 + 0.35 * ld1(k), sr = 0.3 + 0.4 * ld2(k);
    if (!region_contains(RegionSpec::d_H(), tr, sr)) continue;
    const double X = 0.06 * ld2(k) - 0.03, Y = 0.06 * ld1(k) - 0.03;
    const Hessian2 hv = hess_V(7, {Complex(tr, X), Complex(sr, Y)});
    const double a = hv.tt.real(), b = hv.ts.real(), c = hv.ss.real();
    const double d = hv.tt.imag(), e = hv.ts.imag(), f = hv.ss.imag();
    double M[4][4] = {{a, b, -d, -e},
                      {b, c, -e, -f},
                      {-d, -e, -a, -b},
                      {-e, -f, -b, -c}};
    // Determinant by Gaussian elimination with partial pivoting.
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
      int piv = col;
      for (int r = col + 1; r < 4; ++r)
        if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
      if (piv != col) {
        for (int cc = 0; cc < 4; ++cc) std::swap(M[col][cc], M[piv][cc]);
        det = -det;
      }
      det *= M[col][col];
      for (int r = col + 1; r < 4; ++r) {
        const double fac = M[r][col] / M[col][col];
        for (int cc = col; cc < 4; ++cc) M[r][cc] -= fac * M[col][cc];
      }
    }
    const double expect = std::norm(hv.det());
    worst_bridge = std::max(worst_bridge,
                            std::abs(det - expect) / std::max(1.0, expect));
    if (det <= 0.0) positive_ok = false;
  }

  bool pd_ok = true;
  const int G = 80;
  for (int i = 0; i < G; ++i) {
    const double t = 0.5 + (0.5 * (i + 0.5)) / G;
    for (int j = 0; j < G; ++j) {
      const double s = (1.0 * (j + 0.5)) / G;
      if (!region_contains(RegionSpec::d_H(), t, s)) continue;
      const auto h = f_hessian_XY(t, 0.0, s, 0.0);
      if (!(h[0] + h[2] > 0.0 && h[0] * h[2] - h[1] * h[1] > 0.0)) pd_ok = false;
    }
  }

  const double elapsed = seconds_since(t0);
  const bool pass = worst_det <= 1e-10 && worst_bridge <= 1e-8 && positive_ok &&
                    pd_ok && elapsed < 10.0;
  report(12, pass,
         fmt("det identity=%.1e 4x4 bridge=%.1e", worst_det, worst_bridge) +
             fmt(" positive=%.0f pd_grid=%.0f ", positive_ok ? 1.0 : 0.0,
                 pd_ok ? 1.0 : 0.0) +
             fmt("t=%.1fs", elapsed));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::printf("summary: %d passed, %d failed of 12\n", g_pass, g_fail);
  return 0;
}
