#pragma once

// Asymptotic approximant of J_N at the critical data, convergence
// experiments against the exact values, and least-squares fitting of the
// correction coefficients kappa_i in the expansion variable
// u = 2 pi i/(N + 1/2).

#include "twistknot/critical.hpp"
#include "twistknot/jones.hpp"

#include <vector>

namespace twistknot {

struct AsymptoticModel {
  int p = 6;
  CriticalData crit;
  std::vector<Complex> kappas;  // kappa_1 .. kappa_d
  double fit_residual = 0.0;    // max |model - data| over the fit samples
};

// The expansion variable u = 2 pi i/(N + 1/2).
Complex asympt_u(int N);

// Model with no fitted corrections (kappa-free).
AsymptoticModel make_model(int p, const NumericsConfig& cfg = NumericsConfig());

// A_N = (-1)^{p+1} (4 pi e^{pi i/4} (N+1/2)^{1/2} / sin(pi/(2N+1)))
//       * omega(p) e^{(N+1/2) zeta(p)} (1 + sum_i kappa_i u^i).
Complex approximant(const AsymptoticModel& model, int N);

// r_N = jones_exact / A_N with the model's kappa corrections included.
// Switches the exact evaluation to extended precision for N > 150.
Complex ratio_rN(const AsymptoticModel& model, int N,
                 const NumericsConfig& cfg = NumericsConfig());

// Least-squares fit of r_N - 1 to sum_{i=1..d} kappa_i u^i over the sample
// colors, using the kappa-free ratios as data. Requires at least d+2
// distinct samples; throws FitError when the Vandermonde condition number
// exceeds 1e12 (suggesting fewer coefficients or a wider N spread).
AsymptoticModel fit_kappas(int p, const std::vector<int>& N_samples, int d,
                           const NumericsConfig& cfg = NumericsConfig());

struct ConvergenceRow {
  int N = 0;
  double logJ_scaled = 0.0;  // (2 pi/(N+1/2)) log |J_N|
  double target = 0.0;       // 2 pi zeta_R(p)
  double gap = 0.0;          // logJ_scaled - target
};

// Growth-rate table for the volume limit; extended precision for N > 150.
std::vector<ConvergenceRow> convergence_experiment(
    int p, const std::vector<int>& N_list,
    const NumericsConfig& cfg = NumericsConfig());

}  // namespace twistknot
