"""Cubic root finding and the three named constants of the gasket family.

The regime boundaries of the family are algebraic numbers: the roots of three
specific cubics.  ``solve_cubic`` is a thin bracketing wrapper; ``constants``
computes and caches the three values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from scipy.optimize import brentq

from .errors import NoSignChangeError

RESIDUAL_TOL = 1e-12


def solve_cubic(c3: float, c2: float, c1: float, c0: float, lo: float, hi: float) -> float:
    """Root of c3*x^3 + c2*x^2 + c1*x + c0 inside [lo, hi].

    The interval must bracket a sign change.  The returned root satisfies
    |p(root)| < 1e-12.
    """

    def p(x: float) -> float:
        return ((c3 * x + c2) * x + c1) * x + c0

    if p(lo) * p(hi) > 0:
        raise NoSignChangeError(
            f"no sign change of the cubic on [{lo}, {hi}]"
        )
    root = brentq(p, lo, hi, xtol=1e-15, rtol=8.9e-16)
    residual = abs(p(root))
    if residual >= RESIDUAL_TOL:
        raise NoSignChangeError(
            f"root residual {residual:.3e} exceeds {RESIDUAL_TOL}"
        )
    return float(root)


@dataclass(frozen=True)
class Constants:
    """The three cubic roots delimiting the gasket regimes.

    beta_star   root of x^3 - x^2 - 1       (~1.4656): below it the uniform
                coin process visits every switch region infinitely often.
    beta_sup    root of x^3 - 2x^2 + 2x - 2 (~1.5437): upper end of the
                radial-hole regime.
    lambda_star root of x^3 - x^2 + x - 1/2 (~0.6478): the matching
                contraction ratio of the rotated equilateral system,
                lambda_star = 1/beta_sup.
    """

    beta_star: float
    beta_sup: float
    lambda_star: float


@lru_cache(maxsize=1)
def constants() -> Constants:
    return Constants(
        beta_star=solve_cubic(1, -1, 0, -1, 1.0, 2.0),
        beta_sup=solve_cubic(1, -2, 2, -2, 1.0, 2.0),
        lambda_star=solve_cubic(1, -1, 1, -0.5, 0.0, 1.0),
    )
