"""Twist-knot quantum invariants at the half-integer root of unity.

Thin Python wrapper over the C++ core: exact evaluation of the normalized
invariant, critical-point growth constants, the hyperbolic volume channel,
asymptotic models and Fourier coefficients of the smoothed lattice sum.
"""

try:
    # Installed layout: the extension lives inside the package.
    from . import _twistknot as _core
except ImportError:
    # Build-tree layout: the extension sits on sys.path next to the package.
    import _twistknot as _core

__all__ = [
    "AsymptoticModel",
    "BranchError",
    "ConvergenceRow",
    "CriticalData",
    "DomainError",
    "FitError",
    "FourierCoefficient",
    "GluingSolution",
    "JonesValue",
    "NumericsConfig",
    "SolverError",
    "approximant",
    "convergence",
    "critical",
    "fit_kappas",
    "gluing",
    "hhat",
    "jones",
    "make_model",
    "ratio",
    "zeta_R_series",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name
