#include "twistknot/asympt.hpp"

#include <algorithm>
#include <cmath>

namespace twistknot {

namespace {

// Solve the d x d complex linear system A z = b by partial-pivot Gaussian
// elimination (d is tiny: the number of fitted coefficients).
std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> A,
                                 std::vector<Complex> b) {
  const int d = int(b.size());
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    if (std::abs(A[col][col]) == 0.0)
      throw FitError("fit_kappas: singular normal equations");
    for (int r = col + 1; r < d; ++r) {
      const Complex f = A[r][col] / A[col][col];
      for (int c = col; c < d; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> z(d);
  for (int r = d - 1; r >= 0; --r) {
    Complex acc = b[r];
    for (int c = r + 1; c < d; ++c) acc -= A[r][c] * z[c];
    z[r] = acc / A[r][r];
  }
  return z;
}

double norm1(const std::vector<std::vector<Complex>>& A) {
  const int d = int(A.size());
  double best = 0.0;
  for (int c = 0; c < d; ++c) {
    double s = 0.0;
    for (int r = 0; r < d; ++r) s += std::abs(A[r][c]);
    best = std::max(best, s);
  }
  return best;
}

std::vector<std::vector<Complex>> invert_dense(
    const std::vector<std::vector<Complex>>& A) {
  const int d = int(A.size());
  std::vector<std::vector<Complex>> inv(d, std::vector<Complex>(d, 0.0));
  for (int c = 0; c < d; ++c) {
    std::vector<Complex> e(d, 0.0);
    e[c] = 1.0;
    const auto col = solve_dense(A, e);
    for (int r = 0; r < d; ++r) inv[r][c] = col[r];
  }
  return inv;
}

}  // namespace

Complex asympt_u(int N) {
  if (N < 1) throw DomainError("asympt_u: N must be >= 1");
  return kTwoPiI / (N + 0.5);
}

AsymptoticModel make_model(int p, const NumericsConfig& cfg) {
  AsymptoticModel m;
  m.p = p;
  m.crit = solve_critical(p, cfg);
  return m;
}

Complex approximant(const AsymptoticModel& model, int N) {
  if (N < 1) throw DomainError("approximant: N must be >= 1");
  const double half = N + 0.5;
  const double sign = (model.p % 2 == 0) ? -1.0 : 1.0;  // (-1)^{p+1}
  const Complex pref = sign * 4.0 * kPi * std::exp(kPi * kI / 4.0) *
                       std::sqrt(half) / std::sin(kPi / (2.0 * N + 1.0));
  const Complex u = asympt_u(N);
  Complex corr = 1.0;
  Complex upow = 1.0;
  for (const Complex& kap : model.kappas) {
    upow *= u;
    corr += kap * upow;
  }
  return pref * model.crit.omega * std::exp(half * model.crit.zeta) * corr;
}

Complex ratio_rN(const AsymptoticModel& model, int N,
                 const NumericsConfig& cfg) {
  NumericsConfig c = cfg;
  if (N > 150) c.precision_mode = PrecisionMode::Extended;
  const JonesValue j = jones_exact(KnotSpec{model.p, N}, c);
  return j.value / approximant(model, N);
}

AsymptoticModel fit_kappas(int p, const std::vector<int>& N_samples, int d,
                           const NumericsConfig& cfg) {
  if (d < 0) throw DomainError("fit_kappas: d must be >= 0");
  if (int(N_samples.size()) < d + 2)
    throw FitError("fit_kappas: need at least d+2 samples");
  {
    auto sorted = N_samples;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw FitError("fit_kappas: samples must be distinct");
  }

  AsymptoticModel model = make_model(p, cfg);
  const int nsamp = int(N_samples.size());
  std::vector<Complex> u(nsamp), r(nsamp);
  for (int j = 0; j < nsamp; ++j) {
    u[j] = asympt_u(N_samples[j]);
    r[j] = ratio_rN(model, N_samples[j], cfg);
  }

  if (d > 0) {
    // Normal equations of the Vandermonde system M kappa = r - 1,
    // M[j][i] = u_j^{i+1}.
    std::vector<std::vector<Complex>> M(nsamp, std::vector<Complex>(d));
    for (int j = 0; j < nsamp; ++j) {
      Complex upow = 1.0;
      for (int i = 0; i < d; ++i) {
        upow *= u[j];
        M[j][i] = upow;
      }
    }
    std::vector<std::vector<Complex>> A(d, std::vector<Complex>(d, 0.0));
    std::vector<Complex> b(d, 0.0);
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < nsamp; ++j)
          A[i][k] += std::conj(M[j][i]) * M[j][k];
      for (int j = 0; j < nsamp; ++j)
        b[i] += std::conj(M[j][i]) * (r[j] - 1.0);
    }
    // cond(M)^2 ~ cond_1(A); compare against the contracted 1e12 threshold.
    const double condA = norm1(A) * norm1(invert_dense(A));
    if (std::sqrt(condA) > 1e12)
      throw FitError(
          "fit_kappas: Vandermonde condition exceeds 1e12; reduce d or widen "
          "the N spread");
    model.kappas = solve_dense(A, b);
  }

  double worst = 0.0;
  for (int j = 0; j < nsamp; ++j) {
    Complex fitval = 1.0;
    Complex upow = 1.0;
    for (const Complex& kap : model.kappas) {
      upow *= u[j];
      fitval += kap * upow;
    }
    worst = std::max(worst, std::abs(fitval - r[j]));
  }
  model.fit_residual = worst;
  return model;
}

std::vector<ConvergenceRow> convergence_experiment(int p,
                                                   const std::vector<int>& N_list,
                                                   const NumericsConfig& cfg) {
  const CriticalData cd = solve_critical(p, cfg);
  const double target = 2.0 * kPi * cd.zeta_R;
  std::vector<ConvergenceRow> rows;
  rows.reserve(N_list.size());
  for (int N : N_list) {
    NumericsConfig c = cfg;
    if (N > 150) c.precision_mode = PrecisionMode::Extended;
    const JonesValue j = jones_exact(KnotSpec{p, N}, c);
    ConvergenceRow row;
    row.N = N;
    row.logJ_scaled = 2.0 * kPi / (N + 0.5) * j.log_abs;
    row.target = target;
    row.gap = row.logJ_scaled - target;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace twistknot
