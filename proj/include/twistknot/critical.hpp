#pragma once

// Critical-point data of the potential V(p,t,s): the Newton solve, the
// critical value zeta(p) and its real part, the amplitude constant omega(p),
// and the one-dimensional slice quantities T1(c), h(c), c_upper(p).

#include "twistknot/potential.hpp"

namespace twistknot {

struct CriticalData {
  Complex t0, s0;      // critical point
  Complex x0, y0;      // e^{2 pi i t0}, e^{2 pi i s0}
  Complex zeta;        // V(p, t0, s0)
  double zeta_R = 0.0; // Re zeta
  Complex H;           // H(p, x0, y0)
  Complex omega;       // sin(2 pi s0) x0 / ((1-x0)^{3/2} sqrt(det Hess V))
  double residual = 0.0;
};

// Power-series seed (t(g), s(g)) at g = 1/p:
//   t(g) = log(1-2i)/(2 pi i) + 1 + (1+2i)(pi/40) g^2 + (3+i)(pi/80) g^3
//          + ((180 pi + 19 pi^3)/9600 - (45 pi - 4 pi^3)/4800 i) g^4
//   s(g) = 1/2 + g/2 + (1-i)/8 g^2 - i/16 g^3 - (1/61 + (3+pi^2)/192 i) g^4
std::pair<Complex, Complex> seed_from_series(int p);

// Damped Newton on grad V from the series seed. Verifies the solution:
// x0 = sqrt(y0) - 1/sqrt(y0) + 1 (principal square root) and
// (Re t0, Re s0) in U_0; throws SolverError otherwise.
CriticalData solve_critical(int p, const NumericsConfig& cfg = NumericsConfig());

// Series value of 2 pi zeta_R(p) (note the 2 pi scale):
//   v8 - pi^2/4 g^2 - pi^2/8 g^3 - pi^2 (6 + pi^2)/192 g^4,   g = 1/p,
// with v8 = 8 pi Lob(1/4) at full precision.
double zeta_R_series(int p);

// c_upper(p) = (1/pi) sqrt(v8 - 2 pi zeta_R) + 1/2.
// The argument is zeta_R itself (not 2 pi zeta_R).
// Throws DomainError when 2 pi zeta_R > v8.
double c_upper(int p, double zeta_R);

// Critical point of the slice t -> V(p,t,c;0,n) in closed form:
//   T1(c) = 1 + log(1 - 2i sin(pi c))/(2 pi i),  c in [1/2, 1).
Complex slice_critical_T1(double c);

// h(c) = Lob(c/2) + Lob(1/2 - c/2) as an even power series in (c - 1/2),
// accurate to ~1e-10 for |c - 1/2| <= 0.3; head 2 Lob(1/4) - (pi/4)(c-1/2)^2.
double h_series(double c);

}  // namespace twistknot
