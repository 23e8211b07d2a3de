#pragma once

// Special-function stack: dilogarithm Li2 on the cut plane, the Lobachevsky
// function, the level-(N+1/2) quantum dilogarithm phi_N with its derivative,
// and the q-Pochhammer / bracket conventions at the root of unity
// xi_N = e^{2 pi i / (N + 1/2)}.

#include "twistknot/numerics.hpp"

namespace twistknot {

// ---------------------------------------------------------------------------
// Root of unity and bracket conventions
// ---------------------------------------------------------------------------

struct RootOfUnity {
  int N = 1;
  Complex xi;  // e^{2 pi i/(N+1/2)} = e^{4 pi i/(2N+1)}

  static RootOfUnity make(int N);  // throws DomainError for N < 1
  double half() const { return N + 0.5; }
  int order() const { return 2 * N + 1; }  // xi^(2N+1) = 1
};

// {n} = q^{n/2} - q^{-n/2} evaluated at q = xi_N; equals
// 2 i sin(2 pi n/(2N+1)).
Complex bracket(const RootOfUnity& ru, long n);

// {n}! = product_{j=1..n} {j}.
Complex bracket_factorial(const RootOfUnity& ru, long n);

// (q)_n = product_{i=1..n} (1 - q^i) at q = xi_N, by direct product.
// Requires 0 <= n <= 2N.
Complex q_pochhammer(const RootOfUnity& ru, int n);

// The same quantity through the quantum dilogarithm:
//   0 <= n <= N :  exp(phi(1/(2N+1)) - phi((2n+1)/(2N+1)))
//   N <  n <= 2N:  exp(phi(1/(2N+1)) - phi((2n+1)/(2N+1) - 1) + log 2)
Complex q_pochhammer_via_phi(const RootOfUnity& ru, int n,
                             const NumericsConfig& cfg = NumericsConfig());

// ---------------------------------------------------------------------------
// Dilogarithm and Lobachevsky function
// ---------------------------------------------------------------------------

// Principal branch of Li2 with cut along the real ray (1, +infinity).
// Agrees with sum z^n/n^2 on |z| < 1. Throws BranchError on the cut.
Complex li2(Complex z);

// Lobachevsky function: odd, period 1,
// Lob(t) = -int_0^t log|2 sin(pi u)| du = Re(Li2(e^{2 pi i t})/(2 pi i)).
double lobachevsky(double t);

// ---------------------------------------------------------------------------
// Quantum dilogarithm
// ---------------------------------------------------------------------------

// phi_N(t) = int_gamma e^{(2t-1)x} / (4 x sinh(x) sinh(x/(N+1/2))) dx where
// gamma is the hook contour dodging the pole at 0 from above. Defined for
// 0 <= Re t <= 1 (the integral decays exponentially along both rays; the
// closed endpoints are needed at lattice arguments).
Complex phi_N(const RootOfUnity& ru, Complex t,
              const NumericsConfig& cfg = NumericsConfig());

// d/dt phi_N(t): same contour, integrand multiplied by 2x.
Complex phi_N_deriv(const RootOfUnity& ru, Complex t,
                    const NumericsConfig& cfg = NumericsConfig());

// Closed forms used as analytic cross-checks:
// the reflection value phi_N(t) + phi_N(1-t).
Complex phi_reflection_rhs(const RootOfUnity& ru, Complex t);
// phi_N(1/(2N+1)) in closed form.
Complex phi_at_first_lattice(const RootOfUnity& ru);

// Piecewise-Chebyshev interpolant of t -> phi_N(t) on a real interval,
// built once from contour quadrature and then cheap to evaluate; used by the
// Fourier-coefficient quadrature where phi_N is hit millions of times.
class PhiInterpolant {
 public:
  PhiInterpolant(const RootOfUnity& ru, double lo, double hi, double tol,
                 const NumericsConfig& cfg = NumericsConfig());
  Complex operator()(double x) const;  // throws DomainError outside [lo, hi]
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  struct Piece {
    double a, b;
    std::vector<Complex> coeff;  // Chebyshev coefficients
  };
  void build(const RootOfUnity& ru, double a, double b, double tol,
             const NumericsConfig& cfg, int depth);
  double lo_, hi_;
  std::vector<Piece> pieces_;  // sorted by interval
};

}  // namespace twistknot
