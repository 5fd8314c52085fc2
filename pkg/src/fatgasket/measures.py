"""The six-branch random map, Ulam density estimation, and GLS coin coding.

The random map picks one of six affine branches at every step with constant
probabilities built from three parameters (p, s, t).  Branches 1-3 take the
smaller digit on two-way overlaps, branches 4-6 the larger; within each trio
the branch index names the digit used on the triple overlap.  Its stationary
density is estimated with a Monte Carlo Ulam discretization: the hull is
tiled by right triangles (each grid square split along its anti-diagonal),
a row-stochastic transition matrix is sampled, and a power iteration finds
the fixed density.

The interval machinery at the end codes the branch randomness as a
generalized Lueroth series on [0,1): six subintervals with lengths equal to
the branch weights, an affine expansion map, and the digit splitting that
turns one six-symbol stream into the binary and ternary coin tapes.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from numba import njit
from scipy import sparse

from .errors import NoConvergenceError
from .geometry import (
    DEFAULT_TOL,
    DIGIT_VECTORS,
    GREEDY_DIGITS,
    LAZY_DIGITS,
    Beta,
    Digit,
    Point,
    Region,
    classify_region,
    region_codes,
    require_in_hull,
    uniform_hull_points,
)

__all__ = [
    "RandomMapSpec",
    "tau",
    "draw_branches",
    "sample_R_orbit",
    "chain_probability",
    "UlamGrid",
    "build_ulam",
    "stationary_density",
    "apply_transfer",
    "aggregate_density",
    "orbit_histogram",
    "tv_distance",
    "GLSSpec",
    "gls_step",
    "gls_digits",
    "gls_value",
    "split_coins",
    "pushforward_compare",
]


# ---------------------------------------------------------------------------
# The position-dependent random map
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomMapSpec:
    """Parameters of the six-branch random map.

    The branch weights are (p*s, p*t, p*(1-s-t), (1-p)*s, (1-p)*t,
    (1-p)*(1-s-t)); they are positive and sum to one.
    """

    p: float
    s: float
    t: float
    beta: Beta

    def __post_init__(self):
        for name in ("p", "s", "t"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise ValueError(f"{name} must lie in (0, 1), got {v!r}")
        if not self.s + self.t < 1.0:
            raise ValueError("need s + t < 1")

    @cached_property
    def weights(self) -> np.ndarray:
        p, s, t = self.p, self.s, self.t
        return np.array(
            [p * s, p * t, p * (1 - s - t), (1 - p) * s, (1 - p) * t, (1 - p) * (1 - s - t)]
        )


def branch_digit_table(beta: Beta) -> np.ndarray:
    """(7, 6) table: digit used by branch k (column, 0-based) on each region (row).

    All branches agree on the single-cover regions.  On two-way overlaps the
    first branch trio takes the smaller digit, the second the larger.  On the
    triple overlap the digit is the branch index mod 3, except at beta = 3/2
    where the region is a single point and every branch leaves the digit 0.
    """
    table = np.zeros((7, 6), dtype=np.int64)
    for k in range(6):
        table[Region.E0, k] = 0
        table[Region.E1, k] = 1
        table[Region.E2, k] = 2
        table[Region.C01, k] = 0 if k < 3 else 1
        table[Region.C12, k] = 1 if k < 3 else 2
        table[Region.C02, k] = 0 if k < 3 else 2
        table[Region.C012, k] = 0 if beta.value == 1.5 else k % 3
    return table


def tau(spec: RandomMapSpec, k: int, z: Point, tol: float = DEFAULT_TOL) -> Point:
    """Image of z under branch k (1-based, 1..6)."""
    if not 1 <= k <= 6:
        raise ValueError(f"branch index must be 1..6, got {k!r}")
    region = classify_region(spec.beta, z, tol)
    d = Digit(int(branch_digit_table(spec.beta)[region, k - 1]))
    vx, vy = d.vector
    return (spec.beta.value * z[0] - vx, spec.beta.value * z[1] - vy)


def draw_branches(spec: RandomMapSpec, n: int, seed: int) -> np.ndarray:
    """n iid branch indices (values 1..6) drawn with the six weights."""
    rng = np.random.default_rng(seed)
    cum = np.cumsum(spec.weights)[:-1]
    return np.searchsorted(cum, rng.random(n), side="right").astype(np.int64) + 1


def sample_R_orbit(spec: RandomMapSpec, z0: Point, n: int, seed: int,
                   tol: float = DEFAULT_TOL) -> np.ndarray:
    """(n+1, 2) orbit of the random map from z0; deterministic given the seed."""
    z = require_in_hull(spec.beta, z0, tol)
    branches = draw_branches(spec, n, seed)
    table = branch_digit_table(spec.beta)
    out = np.empty((n + 1, 2))
    out[0] = z
    bv = spec.beta.value
    b = spec.beta.piece
    h = spec.beta.split
    x, y = z
    for i in range(n):
        if x < b:
            if y < b:
                reg = 0
            elif x + y <= h:
                reg = 5
            else:
                reg = 2
        elif y < b:
            reg = 3 if x + y <= h else 1
        else:
            reg = 6 if x + y <= h else 4
        v = DIGIT_VECTORS[table[reg, branches[i] - 1]]
        x = bv * x - v[0]
        y = bv * y - v[1]
        if x < 0.0:
            x = 0.0
        if y < 0.0:
            y = 0.0
        out[i + 1, 0] = x
        out[i + 1, 1] = y
    return out


def chain_probability(spec: RandomMapSpec, chain: Sequence[int], z: Point,
                      tol: float = DEFAULT_TOL) -> float:
    """Probability of the branch word ``chain`` started at z.

    Each factor is the weight of the branch evaluated at the current orbit
    point; the weights are constants, so the result is the product of the
    weights along the word, but the orbit is walked anyway to honour the
    position-dependent form.
    """
    w = require_in_hull(spec.beta, z, tol)
    weights = spec.weights
    prob = 1.0
    for k in chain:
        if not 1 <= k <= 6:
            raise ValueError(f"branch index must be 1..6, got {k!r}")
        prob *= weights[k - 1]
        w = tau(spec, k, w, tol)
    return prob


# ---------------------------------------------------------------------------
# Ulam discretization of the transfer operator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UlamGrid:
    """Triangular-cell tiling of the hull with a sampled transition matrix.

    Each of the n x n grid squares is split along its anti-diagonal; squares
    crossing the hypotenuse contribute only their inner triangle, so the hull
    is tiled exactly by n^2 congruent right triangles of area step^2/2.
    ``matrix`` is row-stochastic: entry (r, c) estimates the fraction of cell
    r (weighted by branch probabilities for the random map) sent into cell c.
    """

    beta: Beta
    n: int
    cells: np.ndarray            # (ncells, 3, 2) vertex array
    centroids: np.ndarray        # (ncells, 2)
    areas: np.ndarray            # (ncells,)
    matrix: sparse.csr_matrix
    step: float
    _raw_to_row: np.ndarray = field(repr=False)

    @property
    def ncells(self) -> int:
        return len(self.areas)

    def locate(self, points: np.ndarray) -> np.ndarray:
        """Row index of the cell containing each point (clipped to the hull)."""
        return _locate(points, self.n, self.step, self._raw_to_row)


def _cell_layout(beta: Beta, n: int):
    """Raw ids, vertices, centroids of the tiling; raw id = (square*2 + upper)."""
    g = beta.side / n
    raw_ids = []
    verts = []
    for cy in range(n):
        for cx in range(n):
            if cx + cy > n - 1:
                continue
            lo = np.array([[cx, cy], [cx + 1, cy], [cx, cy + 1]], dtype=float) * g
            raw_ids.append((cy * n + cx) * 2)
            verts.append(lo)
            if cx + cy <= n - 2:
                up = np.array([[cx + 1, cy + 1], [cx, cy + 1], [cx + 1, cy]], dtype=float) * g
                raw_ids.append((cy * n + cx) * 2 + 1)
                verts.append(up)
    raw_ids = np.array(raw_ids, dtype=np.int64)
    verts = np.array(verts)
    centroids = verts.mean(axis=1)
    raw_to_row = -np.ones(2 * n * n, dtype=np.int64)
    raw_to_row[raw_ids] = np.arange(len(raw_ids))
    return raw_ids, verts, centroids, raw_to_row, g


def _locate(points: np.ndarray, n: int, g: float, raw_to_row: np.ndarray) -> np.ndarray:
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    cx = np.clip((pts[:, 0] / g).astype(np.int64), 0, n - 1)
    cy = np.clip((pts[:, 1] / g).astype(np.int64), 0, n - 1)
    fx = pts[:, 0] / g - cx
    fy = pts[:, 1] / g - cy
    upper = (fx + fy) > 1.0
    raw = (cy * n + cx) * 2 + upper
    rows = raw_to_row[raw]
    # the upper triangle of a hypotenuse square does not exist; rounding can
    # land there, in which case the inner triangle of the same square is meant
    bad = rows < 0
    if np.any(bad):
        rows = rows.copy()
        rows[bad] = raw_to_row[raw[bad] - 1]
    return rows


def _stratified_cell_samples(verts: np.ndarray, samples: int,
                             rng: np.random.Generator) -> tuple[np.ndarray, int]:
    """Jittered samples per cell: an s x s grid on the unit square folded onto
    the unit triangle, then mapped affinely onto each cell.  Returns the
    (ncells, m, 2) array and the actual per-cell count m = s^2 >= samples."""
    s = math.ceil(math.sqrt(samples))
    m = s * s
    ncells = len(verts)
    ii, jj = np.meshgrid(np.arange(s), np.arange(s), indexing="ij")
    u = (ii.ravel()[None, :] + rng.random((ncells, m))) / s
    v = (jj.ravel()[None, :] + rng.random((ncells, m))) / s
    fold = u + v > 1.0
    u[fold] = 1.0 - u[fold]
    v[fold] = 1.0 - v[fold]
    origin = verts[:, 0, :]
    e1 = verts[:, 1, :] - origin
    e2 = verts[:, 2, :] - origin
    pts = (
        origin[:, None, :]
        + u[:, :, None] * e1[:, None, :]
        + v[:, :, None] * e2[:, None, :]
    )
    return pts, m


def build_ulam(map: str | RandomMapSpec, n: int, samples: int, seed: int,
               beta: Beta | None = None) -> UlamGrid:
    """Monte Carlo Ulam matrix for the greedy map, the lazy map, or the random map.

    ``map`` is "greedy", "lazy", or a RandomMapSpec (whose beta is used).
    Each cell is probed with stratified sample points (rounded up to a square
    count >= ``samples``); row (r, c) is the sampled fraction of cell r sent
    to cell c, branch-weighted for the random map.  Rows are normalized to
    sum to one exactly.
    """
    if isinstance(map, RandomMapSpec):
        spec = map
        beta = spec.beta
        table = branch_digit_table(beta)
        weights = spec.weights
    elif map in ("greedy", "lazy"):
        if beta is None:
            raise ValueError("deterministic maps need an explicit beta")
        spec = None
        digits = GREEDY_DIGITS if map == "greedy" else LAZY_DIGITS
        table = np.repeat(digits[:, None], 6, axis=1)
        weights = np.array([1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    else:
        raise ValueError(f"unknown map selector {map!r}")
    if n < 2:
        raise ValueError("need at least 2 subdivisions per axis")
    if samples < 16:
        raise ValueError("need at least 16 samples per cell")

    rng = np.random.default_rng(seed)
    raw_ids, verts, centroids, raw_to_row, g = _cell_layout(beta, n)
    ncells = len(raw_ids)
    pts, m = _stratified_cell_samples(verts, samples, rng)
    flat = pts.reshape(-1, 2)
    codes = region_codes(beta, flat)
    rows = np.repeat(np.arange(ncells), m)

    mats = []
    for k in range(6):
        if weights[k] == 0.0:
            continue
        digit_idx = table[codes, k]
        images = beta.value * flat - DIGIT_VECTORS[digit_idx]
        dest = _locate(images, n, g, raw_to_row)
        mats.append(
            sparse.coo_matrix(
                (np.full(ncells * m, weights[k] / m), (rows, dest)),
                shape=(ncells, ncells),
            )
        )
    matrix = sum(mats).tocsr()
    row_sums = np.asarray(matrix.sum(axis=1)).ravel()
    matrix = sparse.diags(1.0 / row_sums) @ matrix

    areas = np.full(ncells, g * g / 2.0)
    return UlamGrid(beta, n, verts, centroids, areas, matrix.tocsr(), g, raw_to_row)


def apply_transfer(grid: UlamGrid, density: np.ndarray) -> np.ndarray:
    """One application of the discretized transfer operator to a cell density."""
    mass = np.asarray(density, dtype=float) * grid.areas
    return (mass @ grid.matrix) / grid.areas


def stationary_density(grid: UlamGrid, tol: float = 1e-8,
                       maxiter: int = 10_000) -> np.ndarray:
    """Fixed density of the transfer matrix by power iteration.

    The returned vector is nonnegative with area-weighted sum 1, and the
    L1 distance between the density and its image is below ``tol``.
    """
    mass = np.full(grid.ncells, 1.0 / grid.ncells)
    matrix = grid.matrix
    residual = math.inf
    for _ in range(maxiter):
        new = mass @ matrix
        new /= new.sum()
        residual = float(np.abs(new - mass).sum())
        mass = new
        if residual < tol:
            return mass / grid.areas
    raise NoConvergenceError(maxiter, residual)


def aggregate_density(grid: UlamGrid, density: np.ndarray, bins: int) -> np.ndarray:
    """Cell masses regrouped onto the coarser ``bins`` tiling (bins must divide n).

    Fine triangles nest exactly inside coarse ones when the resolutions
    divide, so centroid lookup is exact.  Returns masses summing to one,
    indexed like an orbit histogram at the same resolution.
    """
    if grid.n % bins != 0:
        raise ValueError("bins must divide the grid resolution")
    mass = np.asarray(density, dtype=float) * grid.areas
    mass /= mass.sum()
    g2 = grid.beta.side / bins
    cx = np.clip((grid.centroids[:, 0] / g2).astype(np.int64), 0, bins - 1)
    cy = np.clip((grid.centroids[:, 1] / g2).astype(np.int64), 0, bins - 1)
    fx = grid.centroids[:, 0] / g2 - cx
    fy = grid.centroids[:, 1] / g2 - cy
    idx = (cy * bins + cx) * 2 + ((fx + fy) > 1.0)
    out = np.zeros(2 * bins * bins)
    np.add.at(out, idx, mass)
    return out


def tv_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Total-variation distance between two normalized histograms."""
    return 0.5 * float(np.abs(np.asarray(a) - np.asarray(b)).sum())


@njit(cache=True)
def _orbit_counts_kernel(x0: float, y0: float, bv: float, b: float, h: float,
                         side: float, table: np.ndarray, branches: np.ndarray,
                         burn_in: int, bins: int, g: float) -> np.ndarray:  # pragma: no cover - jitted
    counts = np.zeros(2 * bins * bins, dtype=np.int64)
    x = x0
    y = y0
    for t in range(branches.shape[0]):
        if x < b:
            if y < b:
                reg = 0
            elif x + y <= h:
                reg = 5
            else:
                reg = 2
        elif y < b:
            if x + y <= h:
                reg = 3
            else:
                reg = 1
        else:
            if x + y <= h:
                reg = 6
            else:
                reg = 4
        if t >= burn_in:
            cx = int(x / g)
            cy = int(y / g)
            if cx > bins - 1:
                cx = bins - 1
            if cy > bins - 1:
                cy = bins - 1
            fx = x / g - cx
            fy = y / g - cy
            idx = (cy * bins + cx) * 2 + (1 if fx + fy > 1.0 else 0)
            counts[idx] += 1
        d = table[reg, branches[t]]
        if d == 1:
            x = bv * x - 1.0
            y = bv * y
        elif d == 2:
            x = bv * x
            y = bv * y - 1.0
        else:
            x = bv * x
            y = bv * y
        if x < 0.0:
            x = 0.0
        if y < 0.0:
            y = 0.0
        s = x + y
        if s > side:
            x *= side / s
            y *= side / s
    return counts


def orbit_histogram(map: str | RandomMapSpec, steps: int, seed: int,
                    beta: Beta | None = None, burn_in: int = 10_000,
                    bins: int = 32, z0: Point | None = None) -> np.ndarray:
    """Normalized visit histogram of a long single orbit on the ``bins`` tiling.

    ``map`` follows the same selector convention as ``build_ulam``.  The
    start point defaults to a seeded uniform draw from the hull.
    """
    if isinstance(map, RandomMapSpec):
        spec = map
        beta = spec.beta
        table = branch_digit_table(beta)
        cum = np.cumsum(spec.weights)[:-1]
    elif map in ("greedy", "lazy"):
        if beta is None:
            raise ValueError("deterministic maps need an explicit beta")
        digits = GREEDY_DIGITS if map == "greedy" else LAZY_DIGITS
        table = np.repeat(digits[:, None], 6, axis=1)
        cum = None
    else:
        raise ValueError(f"unknown map selector {map!r}")
    rng = np.random.default_rng(seed)
    if z0 is None:
        z0 = tuple(uniform_hull_points(beta, 1, rng)[0])
    else:
        z0 = require_in_hull(beta, z0)
    total = steps + burn_in
    if cum is None:
        branches = np.zeros(total, dtype=np.int8)
    else:
        branches = np.searchsorted(cum, rng.random(total), side="right").astype(np.int8)
    counts = _orbit_counts_kernel(
        z0[0], z0[1], beta.value, beta.piece, beta.split, beta.side,
        table, branches, burn_in, bins, beta.side / bins,
    )
    return counts / counts.sum()


# ---------------------------------------------------------------------------
# GLS coding of the branch process
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GLSSpec:
    """Interval coding of [0,1) into six subintervals with given lengths.

    Subinterval k (1-based) is [cum_{k-1}, cum_k) with cum the prefix sums of
    the weights; the expansion map rescales each subinterval affinely onto
    [0,1).  The digit splitting sends symbol x to (0 if x<3 else 1) on the
    binary tape and x mod 3 on the ternary tape.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        if len(w) != 6:
            raise ValueError("need exactly six weights")
        if any(v <= 0.0 for v in w):
            raise ValueError("weights must be positive")
        if abs(sum(w) - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_random_map(cls, spec: RandomMapSpec) -> "GLSSpec":
        return cls(tuple(spec.weights))

    @cached_property
    def cumulative(self) -> tuple[float, ...]:
        out = [0.0]
        for w in self.weights:
            out.append(out[-1] + w)
        out[-1] = 1.0
        return tuple(out)

    @staticmethod
    def h1(x: int) -> int:
        return 0 if x < 3 else 1

    @staticmethod
    def h2(x: int) -> int:
        return x % 3


def gls_step(spec: GLSSpec, w: float) -> tuple[float, int]:
    """One expansion step: returns (rescaled point, emitted symbol 0..5)."""
    if not 0.0 <= w < 1.0:
        raise ValueError(f"w must lie in [0, 1), got {w!r}")
    cum = spec.cumulative
    k = bisect.bisect_right(cum, w, 1, 6)  # 1-based interval index
    w2 = (w - cum[k - 1]) / spec.weights[k - 1]
    if w2 >= 1.0:
        w2 = math.nextafter(1.0, 0.0)
    elif w2 < 0.0:
        w2 = 0.0
    return w2, k - 1


def gls_digits(spec: GLSSpec, w: float, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        w, gamma = gls_step(spec, w)
        out.append(gamma)
    return tuple(out)


def gls_step_array(spec: GLSSpec, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized ``gls_step`` over an array of points in [0, 1)."""
    cum = np.array(spec.cumulative)
    weights = np.array(spec.weights)
    gammas = np.clip(np.searchsorted(cum, w, side="right") - 1, 0, 5)
    w2 = (w - cum[gammas]) / weights[gammas]
    np.clip(w2, 0.0, np.nextafter(1.0, 0.0), out=w2)
    return w2, gammas


def gls_value(spec: GLSSpec, gammas: Iterable[int]) -> float:
    """Point of [0,1) whose symbol stream starts with ``gammas`` (tail-first sum)."""
    cum = spec.cumulative
    weights = spec.weights
    v = 0.0
    for g in reversed(tuple(gammas)):
        if not 0 <= g <= 5:
            raise ValueError(f"symbols must be 0..5, got {g!r}")
        v = cum[g] + weights[g] * v
    return v


def split_coins(gammas: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a six-symbol stream into the binary and ternary coin tapes."""
    for g in gammas:
        if not 0 <= g <= 5:
            raise ValueError(f"symbols must be 0..5, got {g!r}")
    return (
        tuple(GLSSpec.h1(g) for g in gammas),
        tuple(GLSSpec.h2(g) for g in gammas),
    )


# ---------------------------------------------------------------------------
# One-step push-forward comparison
# ---------------------------------------------------------------------------

def _one_step_coin_digits(spec: RandomMapSpec, codes: np.ndarray,
                          rng: np.random.Generator) -> np.ndarray:
    """Digits of the tape-driven step with coin weights {p,1-p} / {s,t,1-s-t}."""
    n = len(codes)
    digits = np.empty(n, dtype=np.int64)
    for r in (Region.E0, Region.E1, Region.E2):
        digits[codes == r] = int(r)
    flips = (rng.random(n) >= spec.p).astype(np.int64)  # 0 with prob p
    lo = np.array([0, 0, 0, 0, 1, 0, 0])
    hi = np.array([0, 0, 0, 1, 2, 2, 0])
    for r in (Region.C01, Region.C12, Region.C02):
        m = codes == r
        digits[m] = np.where(flips[m] == 0, lo[r], hi[r])
    m = codes == Region.C012
    if np.any(m):
        cum = np.array([spec.s, spec.s + spec.t])
        digits[m] = np.searchsorted(cum, rng.random(int(m.sum())), side="right")
    return digits


def pushforward_compare(spec: RandomMapSpec, n_samples: int, seed: int,
                        bins: int = 32,
                        generators: tuple[str, str] = ("kbeta", "branch"),
                        other: RandomMapSpec | None = None) -> float:
    """TV distance between one-step images of a uniform cloud under two samplers.

    Generator "kbeta" consumes coin symbols (binary on two-way overlaps,
    ternary on the triple overlap); generator "branch" draws one of the six
    branches with the composite weights.  Both push the same uniform sample
    of the hull one step; the images are binned on a bins x bins square grid
    over the hull bounding box.  ``other`` replaces the weights of the
    second generator, for deliberate mismatch experiments.
    """
    if n_samples < 1:
        raise ValueError("need at least one sample")
    for gen in generators:
        if gen not in ("kbeta", "branch"):
            raise ValueError(f"unknown generator {gen!r}")
    if other is not None and other.beta != spec.beta:
        raise ValueError("both samplers must share the same beta")
    beta = spec.beta
    rng = np.random.default_rng(seed)
    pts = uniform_hull_points(beta, n_samples, rng)
    codes = region_codes(beta, pts)
    table = branch_digit_table(beta)
    gen_code = {"kbeta": 1, "branch": 2}

    def image(gen: str, gspec: RandomMapSpec) -> np.ndarray:
        # per-slot stream: identical generators with the same seed push the
        # cloud identically, so their TV distance is exactly zero
        slot_rng = np.random.default_rng([seed, gen_code[gen]])
        if gen == "kbeta":
            digits = _one_step_coin_digits(gspec, codes, slot_rng)
        else:
            cum = np.cumsum(gspec.weights)[:-1]
            ks = np.searchsorted(cum, slot_rng.random(n_samples), side="right")
            digits = table[codes, ks]
        return beta.value * pts - DIGIT_VECTORS[digits]

    g = beta.side / bins

    def hist(img: np.ndarray) -> np.ndarray:
        cx = np.clip((img[:, 0] / g).astype(np.int64), 0, bins - 1)
        cy = np.clip((img[:, 1] / g).astype(np.int64), 0, bins - 1)
        counts = np.bincount(cy * bins + cx, minlength=bins * bins).astype(float)
        return counts / counts.sum()

    return tv_distance(
        hist(image(generators[0], spec)),
        hist(image(generators[1], other if other is not None else spec)),
    )
