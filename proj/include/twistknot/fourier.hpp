#pragma once

// Fourier coefficients hhat_N(m,n) of the smoothed lattice sum: fixed
// tensor Gauss-Legendre quadrature of the psi-weighted oscillatory integrand
// over D'_0, the s -> 1-s symmetry structure, and the Poisson-summation
// consistency check against the lattice side.

#include "twistknot/jones.hpp"

#include <utility>

namespace twistknot {

struct FourierCoefficient {
  int m = 0, n = 0;
  Complex value{0.0, 0.0};
  double quad_error = 0.0;  // panel-doubling estimate, absolute
  int N = 0, p = 0;
};

// Shared quadrature state for one (p, N): the phi interpolant is built once
// and reused by every (m, n).
class FourierEngine {
 public:
  // eps controls the bump transition width (psi = 1 on D'_eps, 0 off D'_0);
  // N above n_cap is rejected with DomainError (cost grows like N^3).
  explicit FourierEngine(const KnotSpec& spec, double eps = 0.05,
                         const NumericsConfig& cfg = NumericsConfig(),
                         int n_cap = 40);

  // hhat_N(m,n) = (-1)^{p+m+n} e^{pi i/4} ((N+1/2)^{3/2}/sin(pi/(2N+1)))
  //               * integral_{D'_0} psi sin(2 pi s) e^{(N+1/2) V_N(m,n)} dt ds.
  FourierCoefficient hhat(const FourierIndex& idx) const;

  // The bare integrand psi(t,s) sin(2 pi s) e^{(N+1/2) V_N(p,t,s;m,n)},
  // exposed for the pointwise symmetry tests (zero outside D'_0).
  Complex integrand(const FourierIndex& idx, double t, double s) const;

  // Lattice side of Poisson summation: sum of psi * g_term over the lattice
  // points falling inside D'_0.
  Complex lattice_sum() const;

  const KnotSpec& spec() const { return spec_; }
  double eps() const { return eps_; }

 private:
  Complex integrate(const FourierIndex& idx, int panels) const;

  KnotSpec spec_;
  double eps_;
  NumericsConfig cfg_;
  PhiInterpolant phi_;
};

// One-shot convenience wrapper around FourierEngine.
FourierCoefficient hhat(const KnotSpec& spec, const FourierIndex& idx,
                        double eps = 0.05,
                        const NumericsConfig& cfg = NumericsConfig());

// (lattice side, spectral side): sum psi*g over the lattice versus
// sum of hhat(m,n) for m in {-1,0,1}, |n| <= window.
std::pair<Complex, Complex> poisson_check(const KnotSpec& spec, int window,
                                          double eps = 0.05,
                                          const NumericsConfig& cfg = NumericsConfig());

}  // namespace twistknot
