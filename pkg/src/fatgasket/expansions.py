"""Digit expansions driven by coin tapes, and the two coding directions.

A point of the hull has many digit expansions; which one gets emitted is
decided by two finite coin tapes.  On the three single-cover regions the
digit is forced and no coin is spent; on a two-way overlap one binary symbol
is consumed (0 picks the smaller digit, 1 the larger); on the triple overlap
one ternary symbol names the digit outright.  The greedy and lazy maps are
the all-ones/all-twos and all-zeros extremes of the same mechanism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    InadmissibleDigitError,
    PointInHoleError,
    TapeExhaustedError,
)
from .geometry import (
    DEFAULT_TOL,
    Beta,
    Digit,
    Point,
    Region,
    Regime,
    SWITCH_HI,
    SWITCH_LO,
    classify_region,
    f_inverse,
    greedy_step,
    lazy_step,
)

_TWO_WAY = (Region.C01, Region.C12, Region.C02)


@dataclass(frozen=True)
class CoinTapes:
    """Finite binary and ternary coin tapes with read cursors.

    ``k`` counts consumed two-sided flips (into ``omega``), ``l`` consumed
    three-sided flips (into ``upsilon``).  Tapes are immutable; consuming a
    symbol returns a new instance with the cursor advanced.
    """

    omega: tuple[int, ...] = ()
    upsilon: tuple[int, ...] = ()
    k: int = 0
    l: int = 0

    def __post_init__(self):
        if any(s not in (0, 1) for s in self.omega):
            raise ValueError("omega symbols must be 0 or 1")
        if any(s not in (0, 1, 2) for s in self.upsilon):
            raise ValueError("upsilon symbols must be 0, 1 or 2")
        if not 0 <= self.k <= len(self.omega):
            raise ValueError("omega cursor out of range")
        if not 0 <= self.l <= len(self.upsilon):
            raise ValueError("upsilon cursor out of range")

    @classmethod
    def from_strings(cls, omega: str = "", upsilon: str = "") -> "CoinTapes":
        return cls(tuple(int(c) for c in omega), tuple(int(c) for c in upsilon))

    def read_omega(self) -> tuple[int, "CoinTapes"]:
        if self.k >= len(self.omega):
            raise TapeExhaustedError("omega")
        return self.omega[self.k], CoinTapes(self.omega, self.upsilon, self.k + 1, self.l)

    def read_upsilon(self) -> tuple[int, "CoinTapes"]:
        if self.l >= len(self.upsilon):
            raise TapeExhaustedError("upsilon")
        return self.upsilon[self.l], CoinTapes(self.omega, self.upsilon, self.k, self.l + 1)


class ExpansionRecord(NamedTuple):
    """Outcome of running the coin-driven map for a number of steps."""

    digits: tuple[Digit, ...]
    visits_c: tuple[int, ...]      # step indices spent in a two-way overlap
    visits_c012: tuple[int, ...]   # step indices spent in the triple overlap
    final: Point
    tapes: CoinTapes
    exhausted: str | None = None   # tape that ran out, if the run stopped early


class CoinCoding(NamedTuple):
    """Coin prefixes recovered from a digit string, with the visit log."""

    omega: tuple[int, ...]
    upsilon: tuple[int, ...]
    visits: tuple[tuple[int, str], ...]  # (step index, "C" or "C012")


def kbeta_step(beta: Beta, tapes: CoinTapes, z: Point,
               tol: float = DEFAULT_TOL) -> tuple[CoinTapes, Point, Digit]:
    """One coin-driven step; consumes a tape symbol only on overlap regions."""
    region = classify_region(beta, z, tol)
    if region in _TWO_WAY:
        symbol, tapes = tapes.read_omega()
        d = SWITCH_LO[region] if symbol == 0 else SWITCH_HI[region]
    elif region is Region.C012:
        symbol, tapes = tapes.read_upsilon()
        d = Digit(symbol)
    else:
        d = Digit(int(region))
    return tapes, f_inverse(beta, d, z), d


def expand(beta: Beta, tapes: CoinTapes, z: Point, n: int,
           tol: float = DEFAULT_TOL) -> ExpansionRecord:
    """Run the coin-driven map n steps (stopping early if a tape runs out)."""
    digits: list[Digit] = []
    visits_c: list[int] = []
    visits_c012: list[int] = []
    exhausted = None
    for j in range(n):
        before = tapes
        try:
            tapes, z, d = kbeta_step(beta, tapes, z, tol)
        except TapeExhaustedError as err:
            exhausted = err.tape
            break
        digits.append(d)
        if tapes.k > before.k:
            visits_c.append(j)
        elif tapes.l > before.l:
            visits_c012.append(j)
    return ExpansionRecord(
        tuple(digits), tuple(visits_c), tuple(visits_c012), z, tapes, exhausted
    )


def greedy_expansion(beta: Beta, z: Point, n: int,
                     tol: float = DEFAULT_TOL) -> tuple[Digit, ...]:
    digits = []
    for _ in range(n):
        z, d = greedy_step(beta, z, tol)
        digits.append(d)
    return tuple(digits)


def lazy_expansion(beta: Beta, z: Point, n: int,
                   tol: float = DEFAULT_TOL) -> tuple[Digit, ...]:
    digits = []
    for _ in range(n):
        z, d = lazy_step(beta, z, tol)
        digits.append(d)
    return tuple(digits)


def expansion_value(beta: Beta, digits: Iterable[Digit]) -> Point:
    """Partial sum of digits[i] / beta^(i+1), evaluated tail-first for stability."""
    x = 0.0
    y = 0.0
    for d in reversed(tuple(digits)):
        v = d.vector
        x = (x + v[0]) / beta.value
        y = (y + v[1]) / beta.value
    return (x, y)


def admissible_digits(beta: Beta, z: Point, tol: float = DEFAULT_TOL,
                      depth: int | None = None) -> frozenset[Digit]:
    """Digits that can start an expansion of z.

    Forced to the region digit on single covers, a pair on two-way overlaps,
    all three on the triple overlap.  In the radial regime the corrected
    partition (holes reassign nearby overlap points) decides.
    """
    if beta.regime is Regime.RADIAL:
        from . import radial

        region = radial.classify_radial(beta, z, depth=depth, tol=tol)
        if region is radial.RadialRegion.HOLE:
            raise PointInHoleError(z)
        return _REGION_DIGITS[region.value]
    region = classify_region(beta, z, tol)
    return _REGION_DIGITS[region.value]


_REGION_DIGITS: tuple[frozenset[Digit], ...] = (
    frozenset({Digit.Q0}),
    frozenset({Digit.Q1}),
    frozenset({Digit.Q2}),
    frozenset({Digit.Q0, Digit.Q1}),
    frozenset({Digit.Q1, Digit.Q2}),
    frozenset({Digit.Q0, Digit.Q2}),
    frozenset({Digit.Q0, Digit.Q1, Digit.Q2}),
)


def coins_from_digits(beta: Beta, z: Point, digits: Sequence[Digit],
                      tol: float = DEFAULT_TOL,
                      depth: int | None = None) -> CoinCoding:
    """Recover the coin prefixes that make the coin-driven map emit ``digits``.

    Walks the orbit z_{j+1} = beta*z_j - digits[j], checking admissibility at
    every step.  On each two-way overlap visit one binary symbol is recorded
    (0 if the smaller digit was taken), on each triple-overlap visit the
    digit index itself.  Feeding the prefixes back into ``expand`` reproduces
    the digit string exactly.
    """
    radial_mode = beta.regime is Regime.RADIAL
    if radial_mode:
        from . import radial

    omega: list[int] = []
    upsilon: list[int] = []
    visits: list[tuple[int, str]] = []
    for j, d in enumerate(digits):
        if radial_mode:
            rregion = radial.classify_radial(beta, z, depth=depth, tol=tol)
            if rregion is radial.RadialRegion.HOLE:
                raise PointInHoleError(z)
            allowed = _REGION_DIGITS[rregion.value]
            region = Region(rregion.value)
        else:
            region = classify_region(beta, z, tol)
            allowed = _REGION_DIGITS[region.value]
        if d not in allowed:
            raise InadmissibleDigitError(j, d, allowed)
        if region in _TWO_WAY:
            omega.append(0 if d == SWITCH_LO[region] else 1)
            visits.append((j, "C"))
        elif region is Region.C012:
            upsilon.append(int(d))
            visits.append((j, "C012"))
        z = f_inverse(beta, d, z)
    return CoinCoding(tuple(omega), tuple(upsilon), tuple(visits))
