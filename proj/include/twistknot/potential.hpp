#pragma once

// Potential functions for the twist-knot family: the limiting potential V and
// its Fourier-shifted variants, the finite-level potential V_N built from the
// quantum dilogarithm, closed-form gradient/Hessian data, the real-part
// function f with its piecewise-linear comparison bound F, region geometry
// (D, D'_0, D'_eps, D''_0, D_H, U_n) and the smooth bump weight psi.

#include "twistknot/polylog.hpp"

#include <array>
#include <utility>

namespace twistknot {

// ---------------------------------------------------------------------------
// Shared parameter types
// ---------------------------------------------------------------------------

// Twist parameter p (2p half-twists plus a clasp) and color N.
struct KnotSpec {
  int p = 6;
  int N = 1;
  void validate() const;  // throws DomainError for p == 0 or N < 1
};

struct PotentialPoint {
  Complex t{0.0, 0.0};
  Complex s{0.0, 0.0};
};

// Index (m, n) of a Fourier-shifted potential: V - 2 pi i (m t + n s).
struct FourierIndex {
  int m = 0;
  int n = 0;
};

// ---------------------------------------------------------------------------
// Potentials
// ---------------------------------------------------------------------------

// V(p,t,s) = pi i((2p+1)s^2 - (2p+3)s - 2t)
//          + (Li2(e^{2pi i(t+s)}) + Li2(e^{2pi i(t-s)}) - 3 Li2(e^{2pi i t})
//             + pi^2/6) / (2 pi i).
Complex V(int p, const PotentialPoint& pt);

// V(p,t,s;m,n) = V(p,t,s) - 2 pi i (m t + n s).
Complex V_mn(int p, const PotentialPoint& pt, const FourierIndex& idx);

// Finite-level potential. With h = 1/(2N+1):
//   V_N(p,t,s) = pi i((2p+1)s^2 - (2p+3)s + (4h - 2)t - (6p+7)h^2/3 - 1/12)
//     + (1/(N+1/2)) (phi(t+s+h [-1 when Re(t+s) > 1]) + phi(t-s+h)
//                    - phi(t) - phi(t-h) - phi(t+h)),
// then shifted by -2 pi i (m t + n s). The boundary Re(t+s) = 1 resolves to
// the unshifted branch.
Complex V_N_full(const KnotSpec& spec, const PotentialPoint& pt,
                 const FourierIndex& idx, const NumericsConfig& cfg = NumericsConfig());

// Same, but phi values come from a caller-supplied evaluator of real
// arguments (e.g. a PhiInterpolant); only valid for real (t, s).
Complex V_N_full(const KnotSpec& spec, double t, double s,
                 const FourierIndex& idx,
                 const std::function<Complex(double)>& phi);

// ---------------------------------------------------------------------------
// Derivatives
// ---------------------------------------------------------------------------

// (dV/dt, dV/ds) in closed form via principal logarithms.
// Throws DomainError on the singular loci e^{2pi i t} = 1, e^{2pi i(t+-s)} = 1.
std::array<Complex, 2> grad_V(int p, const PotentialPoint& pt);

struct Hessian2 {
  Complex tt, ts, ss;  // symmetric 2x2
  Complex det() const { return tt * ss - ts * ts; }
};

Hessian2 hess_V(int p, const PotentialPoint& pt);

// H(p,x,y) with x = e^{2pi i t}, y = e^{2pi i s}; satisfies
// det Hess(V) = (2 pi i)^2 H(p,x,y).
Complex H_of(int p, Complex x, Complex y);

// ---------------------------------------------------------------------------
// Real-part function f and the comparison bound F
// ---------------------------------------------------------------------------

// f(p,t,X,s,Y;m,n) = Re V(p, t + i X, s + i Y; m, n).
double f_real(int p, double t, double X, double s, double Y,
              const FourierIndex& idx);

// The (X,Y)-Hessian of f at (t,X,s,Y) in closed form:
//   2 pi [[3a+b+c, b-c], [b-c, b+c]]
// with a = -Im 1/(1-x), b = Im 1/(1-xy), c = Im 1/(1-x/y).
// Returned as {fXX, fXY, fYY}.
std::array<double, 3> f_hessian_XY(double t, double X, double s, double Y);

// Piecewise-linear comparison function F(X,Y;m,n) at a base point (t,s):
//   [X+Y<0] ((t+s) - 3/2)(X+Y) + [X-Y<0] ((t-s) - 1/2)(X-Y)
//   + [X<0] (3/2 - 3t) X + (p + 3/2 + n - (2p+1)s) Y + (m+1) X.
double F_bound(int p, double t, double s, double X, double Y,
               const FourierIndex& idx);

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

struct RegionSpec {
  enum class Name {
    D,              // {1 < t+s < 2, 0 < t-s < 1, 1/2 < t < 1}
    Dprime0,        // {0.02<=t-s<=0.7, 1.02<=t+s<=1.7, 0.2<=s<=0.8, 0.5<=t<=0.909}
    DprimeEps,      // Dprime0 with every bound tightened by eps
    Ddoubleprime0,  // Dprime0 intersected with {1 - c0(p) <= s <= c0(p)}
    D_H,            // {1/2 < t < 1, 1 < t+s < 3/2, 0 < t-s < 1/2}
    U,              // Dprime0 intersected with the four U_n line inequalities
  };
  Name name = Name::D;
  int p = 0;
  int n = 0;
  double eps = 0.0;

  static RegionSpec region_D();
  static RegionSpec dprime0();
  static RegionSpec dprime_eps(double eps);
  static RegionSpec ddoubleprime0(int p);
  static RegionSpec d_H();
  static RegionSpec u(int n, int p);
};

bool region_contains(const RegionSpec& r, double t, double s);

// s-cap of D''_0: 7/(8p) + 1/2, overridden to 0.5871 at p = 6 so that
// D''_0 fits inside D_H (see c_upper in the critical module).
double c0_of(int p);

struct Vertex {
  double t = 0.0, s = 0.0;
};

// Extremal vertices of the U_n line quadrilateral:
//   top    ((3p-2-n)/(4p-1), 1/2 + (5+4n)/(2(4p-1)))
//   bottom ((3p+n)/(4p-1),   1/2 + (3+4n)/(2(4p-1)))
std::pair<Vertex, Vertex> u_vertices(int p, int n);

// Smooth (C^infinity) bump: 1 on D'_eps, 0 outside D'_0, in (0,1) between,
// and symmetric under s -> 1 - s.
double bump_psi(double t, double s, double eps);

// v(t,s) = Lob(t+s) + Lob(t-s) - 3 Lob(t); equals Re V(p,t,s) at real points.
double v_function(double t, double s);

}  // namespace twistknot
