"""Exception types shared by all fatgasket modules."""

from __future__ import annotations


class GasketError(Exception):
    """Base class for all fatgasket errors."""


class OutsideHullError(GasketError):
    """A point lies outside the convex hull of the attractor."""

    def __init__(self, point, beta: float):
        self.point = tuple(point)
        self.beta = beta
        super().__init__(
            f"point {self.point} outside the hull triangle for beta={beta}"
        )


class WrongRegimeError(GasketError):
    """An operation was called with a contraction ratio in the wrong regime."""


class PointInHoleError(GasketError):
    """The point sits in a hole and is not part of the attractor."""

    def __init__(self, point):
        self.point = tuple(point)
        super().__init__(f"point {self.point} lies in a hole of the attractor")


class TapeExhaustedError(GasketError):
    """A coin tape ran out of symbols mid-expansion."""

    def __init__(self, tape: str):
        if tape not in ("omega", "upsilon"):
            raise ValueError(f"unknown tape name {tape!r}")
        self.tape = tape
        super().__init__(f"{tape} tape exhausted")


class InadmissibleDigitError(GasketError):
    """A digit string violates the admissibility constraint at some step."""

    def __init__(self, step: int, digit, allowed):
        self.step = step
        self.digit = digit
        self.allowed = frozenset(allowed)
        names = ",".join(sorted(d.name for d in self.allowed))
        super().__init__(
            f"digit {digit.name} not admissible at step {step} (allowed: {names})"
        )


class NoSignChangeError(GasketError):
    """A bracketing root search was given an interval without a sign change."""


class NoConvergenceError(GasketError):
    """Fixed-point iteration failed to reach the requested tolerance."""

    def __init__(self, maxiter: int, residual: float):
        self.maxiter = maxiter
        self.residual = residual
        super().__init__(
            f"no convergence after {maxiter} iterations (residual {residual:.3e})"
        )


class BadConfigError(GasketError):
    """Invalid command-line configuration."""
