"""The radial-hole regime 3/2 < beta <= beta_sup.

Past beta = 3/2 the triple overlap disappears and an open central triangle H
drops out of the attractor.  Every hole is an image of H under repeated
application of a single corner map, so the holes line up along the three
medians.  A hole image prefixed by a *different* corner map is covered by
the neighbouring piece, which forces the first digit there; the corrected
partition below accounts for that.

The same structure appears, rotated, in the equilateral family
g_i(z) = lambda*z + (1-lambda)*p_i; the affine change of variables
``affine_l`` carries one onto the other when lambda = 1/beta.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .cubic import Constants, constants, solve_cubic  # noqa: F401  (re-exported)
from .errors import PointInHoleError, WrongRegimeError
from .expansions import CoinTapes
from .geometry import (
    DEFAULT_TOL,
    Beta,
    Digit,
    Point,
    Regime,
    SWITCH_HI,
    SWITCH_LO,
    Region,
    f_inverse,
    require_in_hull,
)


class RadialRegion(enum.IntEnum):
    """Corrected partition tag in the radial regime.

    Values 0..5 coincide with the corresponding ``Region`` tags; HOLE marks
    points missing from the attractor.
    """

    E0 = 0
    E1 = 1
    E2 = 2
    C01 = 3
    C12 = 4
    C02 = 5
    HOLE = 6


@dataclass(frozen=True)
class HoleChain:
    """The hole image f_head(f_j^n(H)); ``head=None`` means f_j^n(H) itself."""

    head: int | None
    j: int
    n: int

    def __post_init__(self):
        if self.head is not None and (self.head not in (0, 1, 2) or self.head == self.j):
            raise ValueError("chain head must be a digit index different from j")
        if self.j not in (0, 1, 2):
            raise ValueError("chain digit must be 0, 1 or 2")
        if self.n < 0:
            raise ValueError("chain length must be nonnegative")


def _require_radial(beta: Beta):
    if beta.regime is not Regime.RADIAL:
        raise WrongRegimeError(f"radial-regime operation asked for beta={beta.value}")


def default_depth(beta: Beta, resolution: float = 1e-9) -> int:
    """Chain-search depth at which hole images shrink below ``resolution``."""
    diam = beta.side * math.sqrt(2.0)
    return math.ceil(math.log(diam / resolution) / math.log(beta.value))


def hole_triangle(beta: Beta) -> tuple[Point, Point, Point]:
    """Vertices of the open central hole H = {x < 1/b, y < 1/b, x+y > split}."""
    _require_radial(beta)
    b = beta.piece
    h = beta.split
    return ((b, b), (b, h - b), (h - b, b))


def in_open_hole(beta: Beta, z: Point) -> bool:
    """Strict membership in the open central hole."""
    x, y = z
    b = beta.piece
    return x < b and y < b and x + y > beta.split


def hole_membership(beta: Beta, z: Point, chain: HoleChain) -> bool:
    """Whether z lies in the open hole image named by ``chain``.

    Pulls z back through the chain (head first, then the repeated map) and
    tests open membership in H.
    """
    _require_radial(beta)
    x, y = z
    bv = beta.value
    if chain.head is not None:
        vx, vy = Digit(chain.head).vector
        x = bv * x - vx
        y = bv * y - vy
    vx, vy = Digit(chain.j).vector
    for _ in range(chain.n):
        x = bv * x - vx
        y = bv * y - vy
    return in_open_hole(beta, (x, y))


def find_hole_chain(beta: Beta, z: Point, depth: int | None = None,
                    tilde: Region | None = None,
                    tol: float = DEFAULT_TOL) -> HoleChain | None:
    """Search for a hole chain containing z, up to the given depth.

    Only chains compatible with the coarse region of z are tried: pure
    chains f_i^n(H) inside the matching single-cover band, head-prefixed
    chains inside the matching overlap band.
    """
    _require_radial(beta)
    if depth is None:
        depth = default_depth(beta)
    if tilde is None:
        tilde = _tilde_region(beta, require_in_hull(beta, z, tol))
    if tilde is Region.C012:
        return HoleChain(None, 0, 0) if in_open_hole(beta, z) else None
    if tilde in (Region.E0, Region.E1, Region.E2):
        i = int(tilde)
        n = _chain_hit(beta, z, None, i, depth)
        return None if n is None else HoleChain(None, i, n)
    i, j = _SWITCH_PAIR[tilde]
    n = _chain_hit(beta, z, i, j, depth)
    if n is not None:
        return HoleChain(i, j, n)
    n = _chain_hit(beta, z, j, i, depth)
    if n is not None:
        return HoleChain(j, i, n)
    return None


_SWITCH_PAIR = {Region.C01: (0, 1), Region.C12: (1, 2), Region.C02: (0, 2)}


def _chain_hit(beta: Beta, z: Point, head: int | None, j: int, depth: int) -> int | None:
    """Smallest n <= depth with z in f_head(f_j^n(H)), or None.

    With head given, n starts at 1 (the paper-facing chains); with head
    absent n starts at 0 (H itself counts).
    """
    x, y = z
    bv = beta.value
    if head is not None:
        vx, vy = Digit(head).vector
        x = bv * x - vx
        y = bv * y - vy
        start = 1
    else:
        if in_open_hole(beta, (x, y)):
            return 0
        start = 1
    vx, vy = Digit(j).vector
    for n in range(start, depth + 1):
        x = bv * x - vx
        y = bv * y - vy
        if in_open_hole(beta, (x, y)):
            return n
    return None


def _tilde_region(beta: Beta, z: Point) -> Region:
    """Coarse partition before hole corrections.

    Same cut lines as the triangle regime; the band that used to hold the
    triple overlap is empty here, and the E0 square loses the open hole.
    C012 is reused as the tag for H.
    """
    x, y = z
    b = beta.piece
    h = beta.split
    s = x + y
    if x < b:
        if y < b:
            return Region.C012 if s > h else Region.E0
        return Region.C02 if s <= h else Region.E2
    if y < b:
        return Region.C01 if s <= h else Region.E1
    return Region.C12


def classify_radial(beta: Beta, z: Point, depth: int | None = None,
                    tol: float = DEFAULT_TOL) -> RadialRegion:
    """Corrected partition tag of a hull point in the radial regime.

    A point of the coarse single-cover band that sits in a pure hole chain
    f_i^n(H) is a hole.  A point of a coarse overlap band that sits in a
    covered chain f_i(f_j^n(H)) has its first digit forced to j and is
    reassigned to E_j.  Chains longer than ``depth`` are below resolution
    and ignored.
    """
    _require_radial(beta)
    if depth is None:
        depth = default_depth(beta)
    z = require_in_hull(beta, z, tol)
    tilde = _tilde_region(beta, z)
    if tilde is Region.C012:
        return RadialRegion.HOLE
    if tilde in (Region.E0, Region.E1, Region.E2):
        i = int(tilde)
        if _chain_hit(beta, z, None, i, depth) is not None:
            return RadialRegion.HOLE
        return RadialRegion(i)
    i, j = _SWITCH_PAIR[tilde]
    if _chain_hit(beta, z, i, j, depth) is not None:
        return RadialRegion(j)
    if _chain_hit(beta, z, j, i, depth) is not None:
        return RadialRegion(i)
    return RadialRegion(int(tilde))


def kbeta_radial_step(beta: Beta, tapes: CoinTapes, z: Point,
                      depth: int | None = None,
                      tol: float = DEFAULT_TOL) -> tuple[CoinTapes, Point, Digit]:
    """One coin-driven step in the radial regime (binary tape only)."""
    region = classify_radial(beta, z, depth, tol)
    if region is RadialRegion.HOLE:
        raise PointInHoleError(z)
    if region in (RadialRegion.C01, RadialRegion.C12, RadialRegion.C02):
        r = Region(region.value)
        symbol, tapes = tapes.read_omega()
        d = SWITCH_LO[r] if symbol == 0 else SWITCH_HI[r]
    else:
        d = Digit(region.value)
    return tapes, f_inverse(beta, d, z), d


# ---------------------------------------------------------------------------
# Affine equivalence with the rotated equilateral family
# ---------------------------------------------------------------------------

def equilateral_vertex(i: int) -> Point:
    """Vertex p_i = (2/3)(cos(2*pi*i/3), sin(2*pi*i/3)) of the rotated system."""
    if i not in (0, 1, 2):
        raise ValueError("vertex index must be 0, 1 or 2")
    angle = 2.0 * math.pi * i / 3.0
    return (2.0 / 3.0 * math.cos(angle), 2.0 / 3.0 * math.sin(angle))


def g_apply(lam: float, i: int, z: Point) -> Point:
    """One contraction g_i(z) = lam*z + (1-lam)*p_i of the equilateral system."""
    px, py = equilateral_vertex(i)
    return (lam * z[0] + (1.0 - lam) * px, lam * z[1] + (1.0 - lam) * py)


def affine_l(beta: Beta, z: Point) -> Point:
    """Change of variables carrying the equilateral system onto this one.

    Scaled rotation-reflection plus a shift; it maps p_i to digit_i/(beta-1)
    and satisfies f_i(affine_l(z)) = affine_l(g_i(z)) when lam = 1/beta.
    """
    c = 1.0 / (beta.value - 1.0)
    x, y = z
    r3 = math.sqrt(3.0)
    return (
        c * (-0.5 * x + 0.5 * r3 * y) + c / 3.0,
        c * (-0.5 * x - 0.5 * r3 * y) + c / 3.0,
    )


# ---------------------------------------------------------------------------
# Triangle utilities (chain images are triangles; tests need exact checks)
# ---------------------------------------------------------------------------

def hull_triangle(beta: Beta) -> tuple[Point, Point, Point]:
    s = beta.side
    return ((0.0, 0.0), (s, 0.0), (0.0, s))


def chain_vertices(beta: Beta, chain: HoleChain) -> np.ndarray:
    """(3, 2) vertex array of the hole image named by ``chain``."""
    tri = np.array(hole_triangle(beta))
    vj = np.array(Digit(chain.j).vector)
    for _ in range(chain.n):
        tri = (tri + vj) / beta.value
    if chain.head is not None:
        tri = (tri + np.array(Digit(chain.head).vector)) / beta.value
    return tri


def map_triangle(beta: Beta, i: int, tri: np.ndarray) -> np.ndarray:
    """Forward image of a vertex array under the contraction towards digit i."""
    v = np.array(Digit(i).vector)
    return (np.asarray(tri, dtype=float) + v) / beta.value


def triangle_contains_points(tri: np.ndarray, points: np.ndarray,
                             tol: float = 1e-12) -> bool:
    """All points inside the closed triangle, allowing ``tol`` slack outward."""
    tri = np.asarray(tri, dtype=float)
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    for a in range(3):
        p0 = tri[a]
        e = tri[(a + 1) % 3] - p0
        nrm = np.array([-e[1], e[0]])
        nrm /= np.hypot(*nrm)
        if np.dot(nrm, tri[(a + 2) % 3] - p0) < 0:
            nrm = -nrm
        if np.min((pts - p0) @ nrm) < -tol:
            return False
    return True


def triangles_disjoint(t1: np.ndarray, t2: np.ndarray, tol: float = 1e-12) -> bool:
    """Separating-axis test: disjoint if some edge normal splits the vertex sets."""
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)
    for tri in (t1, t2):
        for a in range(3):
            e = tri[(a + 1) % 3] - tri[a]
            nrm = np.array([-e[1], e[0]])
            norm = np.hypot(*nrm)
            if norm == 0.0:
                continue
            nrm /= norm
            p1 = t1 @ nrm
            p2 = t2 @ nrm
            if p1.max() < p2.min() - tol or p2.max() < p1.min() - tol:
                return True
    return False


def triangle_inradius(tri: np.ndarray) -> float:
    tri = np.asarray(tri, dtype=float)
    a = np.hypot(*(tri[1] - tri[0]))
    b = np.hypot(*(tri[2] - tri[1]))
    c = np.hypot(*(tri[0] - tri[2]))
    s = 0.5 * (a + b + c)
    e1 = tri[1] - tri[0]
    e2 = tri[2] - tri[0]
    area = abs(e1[0] * e2[1] - e1[1] * e2[0]) / 2.0
    return area / s if s > 0 else 0.0


def points_in_eroded_triangle(tri: np.ndarray, points: np.ndarray,
                              eps: float) -> np.ndarray:
    """Boolean mask of points at distance > eps inside the triangle.

    The erosion shifts every edge inward by eps; when the inradius is below
    eps the erosion is empty and the mask is all False.
    """
    tri = np.asarray(tri, dtype=float)
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if triangle_inradius(tri) <= eps:
        return np.zeros(len(pts), dtype=bool)
    mask = np.ones(len(pts), dtype=bool)
    for a in range(3):
        p0 = tri[a]
        e = tri[(a + 1) % 3] - p0
        nrm = np.array([-e[1], e[0]])
        nrm /= np.hypot(*nrm)
        if np.dot(nrm, tri[(a + 2) % 3] - p0) < 0:
            nrm = -nrm
        mask &= (pts - p0) @ nrm > eps
    return mask
