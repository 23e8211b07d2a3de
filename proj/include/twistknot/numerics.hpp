#pragma once

// Precision-configurable complex arithmetic, principal-branch logarithm,
// quadrature engines (1-D adaptive Gauss-Legendre, piecewise contour,
// 2-D rectangle), and a damped Newton solver for 2x2 complex systems.

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistknot {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr Complex kTwoPiI{0.0, 2.0 * kPi};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested on (or across) a branch cut.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature failed to reach the requested tolerance within budget.
// Carries the best available partial result.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, Complex partial, double est_error)
      : std::runtime_error(what), partial_value(partial), partial_error(est_error) {}
  Complex partial_value;
  double partial_error;
};

// Newton iteration failed (singular Jacobian or no convergence).
// Carries the last iterate and residual.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, Complex z1, Complex z2, double residual)
      : std::runtime_error(what), last_z1(z1), last_z2(z2), last_residual(residual) {}
  Complex last_z1, last_z2;
  double last_residual;
};

// Machine-double arithmetic cannot represent the requested result; the
// caller should switch NumericsConfig::precision_mode to Extended.
class EscalationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares / model-fitting failure (ill-conditioned system).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Configuration and result types
// ---------------------------------------------------------------------------

enum class PrecisionMode {
  MachineDouble,  // IEEE double everywhere
  Extended        // 80-bit long double accumulation in cancellation-prone sums
};

struct NumericsConfig {
  PrecisionMode precision_mode = PrecisionMode::MachineDouble;
  double quad_abs_tol = 1e-13;
  double quad_rel_tol = 1e-12;
  double newton_tol = 1e-12;
  int newton_max_iter = 100;
  double contour_radius = 1.0;  // semicircle radius of the hook contour

  void validate() const;  // throws DomainError on nonsense values
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double est_error = 0.0;
  long evaluations = 0;
};

struct Newton2dResult {
  Complex z1, z2;
  int iterations = 0;
  double residual = 0.0;
};

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

// Principal branch: Im(log z) in (-pi, pi]. Throws DomainError on z == 0.
Complex principal_log(Complex z);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
// Computed once per order and cached; deterministic.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

// Adaptive (bisecting) Gauss-Legendre integration of f over [a, b].
QuadResult integrate_adaptive(const std::function<Complex(double)>& f, double a,
                              double b, const NumericsConfig& cfg);

// A path piece for integrate_contour. Rays extend to infinity and are
// truncated adaptively (the integrand must decay exponentially along them).
struct ContourPiece {
  enum class Kind {
    Segment,          // straight real segment [a, b]
    RayPositive,      // [a, +infinity)
    RayNegative,      // (-infinity, a]
    UpperSemicircle,  // |z| = radius, Im z >= 0, traversed from -radius to +radius
  };
  Kind kind;
  double a = 0.0;
  double b = 0.0;
  double radius = 1.0;

  static ContourPiece segment(double a, double b);
  static ContourPiece ray_positive(double from);
  static ContourPiece ray_negative(double from);
  static ContourPiece upper_semicircle(double radius);
};

// The hook-shaped path (-inf, -r] + upper semicircle of radius r + [r, +inf),
// traversed left to right, dodging the origin from above.
std::vector<ContourPiece> hook_contour(double radius);

// Integrate f along the concatenation of pieces.
QuadResult integrate_contour(const std::function<Complex(Complex)>& f,
                             const std::vector<ContourPiece>& pieces,
                             const NumericsConfig& cfg);

// Tensor quadrature of f over [ax, bx] x [ay, by]; panel count is doubled
// until two successive refinements agree within tol.
QuadResult integrate_rect2d(const std::function<Complex(double, double)>& f,
                            double ax, double bx, double ay, double by,
                            double tol);

// ---------------------------------------------------------------------------
// Damped Newton for F : C^2 -> C^2
// ---------------------------------------------------------------------------

using Fn2d = std::function<std::array<Complex, 2>(Complex, Complex)>;
// Jacobian row-major: { dF1/dz1, dF1/dz2, dF2/dz1, dF2/dz2 }
using Jac2d = std::function<std::array<Complex, 4>(Complex, Complex)>;

// Newton iteration with step halving (up to 20 halvings per step) whenever the
// residual fails to decrease. Deterministic for identical inputs and config.
Newton2dResult newton_solve_2d(const Fn2d& F, const Jac2d& J, Complex z1,
                               Complex z2, const NumericsConfig& cfg);

}  // namespace twistknot
