"""Plane geometry of the three-map similarity system and its overlap regions.

The system contracts the plane by 1/beta towards the three corner digits
(0,0), (1,0), (0,1).  For 1 < beta < 2 the pieces overlap; the convex hull of
the attractor is the right triangle with legs 1/(beta-1).  This module holds
the exact region partition of that triangle, the greedy and lazy single
steps, and the involution exchanging them, plus vectorized twins of the hot
operations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .cubic import constants
from .errors import OutsideHullError, WrongRegimeError

Point = tuple[float, float]

DEFAULT_TOL = 1e-9


class Digit(enum.IntEnum):
    """The three digits, totally ordered Q0 < Q1 < Q2 (matching the plane order)."""

    Q0 = 0
    Q1 = 1
    Q2 = 2

    @property
    def vector(self) -> Point:
        return _DIGIT_POINTS[self.value]


_DIGIT_POINTS: tuple[Point, ...] = ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))

#: Digit translation vectors, row i = vector of Digit(i).
DIGIT_VECTORS = np.array(_DIGIT_POINTS)


class Regime(enum.Enum):
    TRIANGLE = "triangle"  # 1 < beta <= 3/2: the attractor fills the hull
    RADIAL = "radial"      # 3/2 < beta <= beta_sup: radial holes appear


class Region(enum.IntEnum):
    """Overlap classification of a hull point (triangle regime).

    E0/E1/E2: covered by exactly one piece, first digit forced.
    C01/C12/C02: double overlaps, two admissible first digits.
    C012: triple overlap, all three digits admissible.
    """

    E0 = 0
    E1 = 1
    E2 = 2
    C01 = 3
    C12 = 4
    C02 = 5
    C012 = 6


#: Digit emitted by the greedy branch on each region (indexed by Region value).
GREEDY_DIGITS = np.array([0, 1, 2, 1, 2, 2, 2], dtype=np.int64)
#: Digit emitted by the lazy branch on each region.
LAZY_DIGITS = np.array([0, 1, 2, 0, 1, 0, 0], dtype=np.int64)
#: Lower/upper digit choice on the two-way switch regions C01, C12, C02.
SWITCH_LO = {Region.C01: Digit.Q0, Region.C12: Digit.Q1, Region.C02: Digit.Q0}
SWITCH_HI = {Region.C01: Digit.Q1, Region.C12: Digit.Q2, Region.C02: Digit.Q2}


@dataclass(frozen=True)
class Beta:
    """A contraction parameter together with its regime.

    The regime is derived from the value (boundary 3/2 counts as triangle)
    unless explicitly overridden, which the command line allows for
    experimentation.
    """

    value: float
    regime: Regime = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        v = self.value
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            raise ValueError(f"beta must be a finite number, got {v!r}")
        sup = constants().beta_sup
        if not 1.0 < v <= sup:
            raise ValueError(
                f"beta must lie in (1, {sup:.10f}], got {v!r}"
            )
        if self.regime is None:
            regime = Regime.TRIANGLE if v <= 1.5 else Regime.RADIAL
            object.__setattr__(self, "regime", regime)
        elif not isinstance(self.regime, Regime):
            raise ValueError(f"regime must be a Regime, got {self.regime!r}")

    @property
    def piece(self) -> float:
        """Side length 1/beta of each contracted copy of the unit structure."""
        return 1.0 / self.value

    @property
    def split(self) -> float:
        """Anti-diagonal level x+y = 1/(beta(beta-1)) separating the overlap bands."""
        return 1.0 / (self.value * (self.value - 1.0))

    @property
    def side(self) -> float:
        """Leg length 1/(beta-1) of the hull triangle."""
        return 1.0 / (self.value - 1.0)


def _two_sum(a: float, b: float) -> tuple[float, float]:
    """Error-free transform: a + b = s + e exactly, with s the rounded sum."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def plane_less(a: Point, b: Point) -> bool:
    """Strict plane order: compare coordinate sums, ties broken by y.

    The sums are compared exactly (rounded part, then the rounding error),
    so the order stays total on distinct doubles even when one coordinate is
    absorbed by the addition.
    """
    sa, ea = _two_sum(a[0], a[1])
    sb, eb = _two_sum(b[0], b[1])
    if sa != sb:
        return sa < sb
    if ea != eb:
        return ea < eb
    return a[1] < b[1]


def _beta_value(beta: Beta | float) -> float:
    return beta.value if isinstance(beta, Beta) else float(beta)


def f_apply(beta: Beta | float, d: Digit, z: Point) -> Point:
    """One contraction step towards digit d: (z + d) / beta.

    Pure similarity arithmetic, valid for any beta > 1; a plain number is
    accepted so the maps can be used outside the dynamics regimes.
    """
    bv = _beta_value(beta)
    v = d.vector
    return ((z[0] + v[0]) / bv, (z[1] + v[1]) / bv)


def f_inverse(beta: Beta | float, d: Digit, z: Point) -> Point:
    """Inverse branch for digit d: beta*z - d."""
    bv = _beta_value(beta)
    v = d.vector
    return (bv * z[0] - v[0], bv * z[1] - v[1])


def in_hull(beta: Beta, z: Point, tol: float = DEFAULT_TOL) -> bool:
    x, y = z
    if not (math.isfinite(x) and math.isfinite(y)):
        return False
    return x >= -tol and y >= -tol and x + y <= beta.side + tol


def require_in_hull(beta: Beta, z: Point, tol: float = DEFAULT_TOL) -> Point:
    """Validate hull membership; snap points within tol of the outer boundary inside."""
    if not in_hull(beta, z, tol):
        raise OutsideHullError(z, beta.value)
    x = max(z[0], 0.0)
    y = max(z[1], 0.0)
    side = beta.side
    s = x + y
    if s > side:
        # pull back onto the hypotenuse, preserving direction from the origin
        x *= side / s
        y *= side / s
    return (x, y)


def classify_region(beta: Beta, z: Point, tol: float = DEFAULT_TOL) -> Region:
    """Region tag of a hull point in the triangle regime.

    Implements the defining inequalities with their exact strict/non-strict
    directions: the vertical and horizontal cuts at 1/beta are closed on the
    right/top side, the anti-diagonal cut at 1/(beta(beta-1)) belongs to the
    inner side.  ``tol`` only snaps points within tol of the outer hull
    boundary back inside; interior boundaries are never blurred.
    """
    if beta.regime is not Regime.TRIANGLE:
        raise WrongRegimeError(
            f"triangle-regime partition asked for beta={beta.value}"
        )
    x, y = require_in_hull(beta, z, tol)
    if beta.value == 1.5 and abs(x - 2.0 / 3.0) <= 1e-12 and abs(y - 2.0 / 3.0) <= 1e-12:
        # the triple overlap degenerates to this single point at beta = 3/2
        return Region.C012
    b = beta.piece
    h = beta.split
    s = x + y
    if x < b:
        if y < b:
            return Region.E0
        return Region.C02 if s <= h else Region.E2
    if y < b:
        return Region.C01 if s <= h else Region.E1
    return Region.C012 if s <= h else Region.C12


def region_codes(beta: Beta, points: np.ndarray) -> np.ndarray:
    """Vectorized region tags (int8 values of ``Region``) for an (N, 2) array.

    Points are assumed inside the hull up to rounding; coordinates are
    clipped to the hull before classification.  The beta = 3/2 single-point
    snap of ``classify_region`` is not applied.
    """
    if beta.regime is not Regime.TRIANGLE:
        raise WrongRegimeError(
            f"triangle-regime partition asked for beta={beta.value}"
        )
    x = np.maximum(points[:, 0], 0.0)
    y = np.maximum(points[:, 1], 0.0)
    s = np.minimum(x + y, beta.side)
    b = beta.piece
    h = beta.split
    out = np.empty(len(x), dtype=np.int8)
    xlt = x < b
    ylt = y < b
    sle = s <= h
    out[xlt & ylt] = Region.E0
    m = ~xlt & ylt
    out[m & sle] = Region.C01
    out[m & ~sle] = Region.E1
    m = xlt & ~ylt
    out[m & sle] = Region.C02
    out[m & ~sle] = Region.E2
    m = ~xlt & ~ylt
    out[m & sle] = Region.C012
    out[m & ~sle] = Region.C12
    return out


def greedy_step(beta: Beta, z: Point, tol: float = DEFAULT_TOL) -> tuple[Point, Digit]:
    """One step of the greedy map: the largest admissible digit is removed."""
    region = classify_region(beta, z, tol)
    d = Digit(int(GREEDY_DIGITS[region]))
    return f_inverse(beta, d, z), d


def lazy_step(beta: Beta, z: Point, tol: float = DEFAULT_TOL) -> tuple[Point, Digit]:
    """One step of the lazy map: the smallest admissible digit is removed."""
    region = classify_region(beta, z, tol)
    d = Digit(int(LAZY_DIGITS[region]))
    return f_inverse(beta, d, z), d


def psi(beta: Beta, z: Point) -> Point:
    """Affine involution (x, y) -> (x, side - x - y) exchanging greedy and lazy.

    It fixes the hull, swaps the two overlap bands, and conjugates the greedy
    step to the lazy step.  Applying it twice is the identity.
    """
    return (z[0], beta.side - z[0] - z[1])


def psi_points(beta: Beta, points: np.ndarray) -> np.ndarray:
    out = np.empty_like(points)
    out[:, 0] = points[:, 0]
    out[:, 1] = beta.side - points[:, 0] - points[:, 1]
    return out


def apply_digit_indices(beta: Beta, points: np.ndarray, digits: np.ndarray) -> np.ndarray:
    """Vectorized inverse branches: beta*points - digit_vector[digits]."""
    return beta.value * points - DIGIT_VECTORS[digits]


def uniform_hull_points(beta: Beta, n: int, rng: np.random.Generator) -> np.ndarray:
    """n points uniform on the hull triangle (square sample folded across the diagonal)."""
    u = rng.random(n)
    v = rng.random(n)
    fold = u + v > 1.0
    u[fold] = 1.0 - u[fold]
    v[fold] = 1.0 - v[fold]
    return np.column_stack((u, v)) * beta.side


@njit(cache=True)
def _chaos_kernel(beta: float, digits: np.ndarray, burn_in: int,
                  x0: float, y0: float) -> np.ndarray:  # pragma: no cover - jitted
    n = digits.shape[0] - burn_in
    out = np.empty((n, 2))
    x = x0
    y = y0
    for t in range(digits.shape[0]):
        d = digits[t]
        if d == 1:
            x = (x + 1.0) / beta
            y = y / beta
        elif d == 2:
            x = x / beta
            y = (y + 1.0) / beta
        else:
            x = x / beta
            y = y / beta
        if t >= burn_in:
            out[t - burn_in, 0] = x
            out[t - burn_in, 1] = y
    return out


def chaos_game(beta: float, n: int, seed: int, burn_in: int = 100) -> np.ndarray:
    """(n, 2) attractor sample from a single chaos-game run with uniform digits.

    Accepts any contraction parameter in (1, 2); the sampler only needs the
    forward similarity maps, so it works beyond the dynamics regimes (the
    command-line renderer uses this for the fractal range too).
    """
    if not 1.0 < beta < 2.0:
        raise ValueError(f"chaos game needs beta in (1, 2), got {beta!r}")
    if n <= 0:
        raise ValueError("need at least one sample point")
    rng = np.random.default_rng(seed)
    digits = rng.integers(0, 3, size=n + burn_in, dtype=np.int64)
    return _chaos_kernel(beta, digits, burn_in, 0.0, 0.0)
