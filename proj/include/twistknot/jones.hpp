#pragma once

// Exact evaluation of the normalized colored Jones polynomial of twist knots
// at the root of unity xi_N = e^{2 pi i/(N+1/2)}, in two forms: the double
// q-Pochhammer sum and the quantum-dilogarithm term representation g(k,l).

#include "twistknot/potential.hpp"

namespace twistknot {

struct JonesValue {
  Complex value{0.0, 0.0};
  double log_abs = 0.0;   // natural log of |value|
  long term_count = 0;    // N(N+1)/2
};

// Double sum over 0 <= l <= k <= N-1 of
//   (-1)^l q^{k(k+3)/4 + p l(l+1)} {k}! {2l+1} / ({k+l+1}! {k-l}!)
//   * prod_{i=1..k} {N+i}{N-i}
// at q = xi_N, with {n} = 2 i sin(2 pi n/(2N+1)). Terms are accumulated in
// log-magnitude/phase form (phases reduced exactly as integer multiples of
// pi/(2N+1)) with compensated summation, k outer / l inner, both ascending.
// In MachineDouble mode, magnitudes beyond exp(700) raise EscalationError;
// Extended mode accumulates in long double.
JonesValue jones_exact(const KnotSpec& spec,
                       const NumericsConfig& cfg = NumericsConfig());

// Region marker of the finite-level potential: 2 when 0 < t+s <= 1
// (boundary resolved to 2), 1 when 1 < t+s < 2.
// Requires 0 < t < 1 and 0 < t-s < 1.
int delta_region(double t, double s);

// Single term of the quantum-dilogarithm representation,
//   g(k,l) = (-1)^p e^{pi i/4} sin(2 pi (2l+1)/(2N+1))
//            / (sqrt(N+1/2) sin(pi/(2N+1)))
//            * delta(t,s) e^{(N+1/2) V_N(p,t,s)}
// at the lattice point t = (2k+1)/(2N+1), s = (2l+1)/(2N+1).
// Summed over 0 <= l <= k <= N-1 this reproduces jones_exact.
Complex g_term(const KnotSpec& spec, int k, int l,
               const NumericsConfig& cfg = NumericsConfig());

// Lobachevsky growth-rate bound at level N:
//   v_N(t,s) = Lob(t+s+h) + Lob(t-s+h) - Lob(t-h) - Lob(t) - Lob(t+h),
// h = 1/(2N+1); controls (1/(N+1/2)) log |g(k,l)|.
double v_lattice_bound(int N, double t, double s);

}  // namespace twistknot
