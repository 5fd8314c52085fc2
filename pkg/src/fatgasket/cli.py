"""Command-line front end: attractor renders, density estimation, orbit dumps.

Subcommands::

    constants   the three cubic-root constants as JSON
    render      chaos-game raster of the attractor as binary PGM
    density     stationary density of a map on the Ulam grid (CSV or PGM)
    orbit       coin-driven orbit trace as JSON
    coins       recover coin prefixes from a digit string as JSON

Exit codes: 0 success, 2 inadmissible digit input, 3 tape exhaustion,
4 convergence failure, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .cubic import constants
from .errors import (
    BadConfigError,
    GasketError,
    InadmissibleDigitError,
    NoConvergenceError,
    TapeExhaustedError,
)
from .expansions import CoinTapes, coins_from_digits, kbeta_step
from .geometry import Beta, Digit, Regime, chaos_game, classify_region
from .measures import RandomMapSpec, build_ulam, stationary_density
from .radial import RadialRegion, classify_radial, kbeta_radial_step

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INADMISSIBLE = 2
EXIT_TAPE = 3
EXIT_NO_CONVERGENCE = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatgasket",
        description="digit expansions and invariant densities on fat Sierpinski gaskets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the three cubic-root constants")
    p.add_argument("--out", type=Path, default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("render", help="chaos-game raster of the attractor (binary PGM)")
    p.add_argument("--beta", type=float, required=True, help="contraction parameter in (1, 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", type=int, default=256, help="pixels per axis")
    p.add_argument("--samples", type=int, default=1_000_000, help="chaos-game points")
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("density", help="stationary density on the Ulam grid")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--map", choices=("greedy", "lazy", "random"), default="greedy")
    p.add_argument("--p", type=float, default=0.5, help="binary coin weight (random map)")
    p.add_argument("--s", type=float, default=1 / 3, help="first ternary weight (random map)")
    p.add_argument("--t", type=float, default=1 / 3, help="second ternary weight (random map)")
    p.add_argument("--grid", type=int, default=64, help="subdivisions per axis")
    p.add_argument("--samples", type=int, default=64, help="sample points per cell")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--maxiter", type=int, default=10_000)
    p.add_argument("--format", choices=("csv", "pgm"), default="csv")
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("orbit", help="coin-driven orbit trace (JSON)")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--point", type=str, required=True, help="start point as 'x,y'")
    p.add_argument("--omega", type=str, default="", help="binary tape, e.g. 0110")
    p.add_argument("--upsilon", type=str, default="", help="ternary tape, e.g. 0212")
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--depth", type=int, default=None, help="hole-chain search depth (radial)")
    p.add_argument("--regime", choices=("triangle", "radial"), default=None,
                   help="override the regime detected from beta")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("coins", help="recover coin prefixes from a digit string (JSON)")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--point", type=str, required=True, help="start point as 'x,y'")
    p.add_argument("--digits", type=str, required=True, help="digit string over 0,1,2")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--regime", choices=("triangle", "radial"), default=None)
    p.add_argument("--out", type=Path, default=None)

    return parser


def _parse_point(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise BadConfigError(f"point must be 'x,y', got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as err:
        raise BadConfigError(f"bad point {text!r}: {err}") from None


def _parse_digits(text: str) -> tuple[Digit, ...]:
    try:
        return tuple(Digit(int(c)) for c in text)
    except ValueError:
        raise BadConfigError(f"digit string must use 0,1,2 only: {text!r}") from None


def _make_beta(value: float, regime: str | None) -> Beta:
    override = None if regime is None else Regime(regime)
    try:
        return Beta(value, override)
    except ValueError as err:
        raise BadConfigError(str(err)) from None


def _emit_json(payload: dict, out: Path | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _write_pgm(path: Path, values: np.ndarray) -> None:
    """Binary PGM (P5, maxval 255), min-max scaled, origin at the top-left."""
    vmin = values.min()
    vmax = values.max()
    if vmax > vmin:
        scaled = np.round(255.0 * (values - vmin) / (vmax - vmin))
    else:
        scaled = np.zeros_like(values)
    rows = scaled.astype(np.uint8)[::-1, :]  # y grows downward in the file
    h, w = rows.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(rows.tobytes())


def _cmd_constants(args) -> int:
    c = constants()
    _emit_json(
        {
            "beta_star": c.beta_star,
            "beta_sup": c.beta_sup,
            "lambda_star": c.lambda_star,
        },
        args.out,
    )
    return EXIT_OK


def _cmd_render(args) -> int:
    if not 1.0 < args.beta < 2.0:
        raise BadConfigError(f"render needs beta in (1, 2), got {args.beta}")
    if args.grid < 2 or args.samples < 1:
        raise BadConfigError("grid must be >= 2 and samples >= 1")
    pts = chaos_game(args.beta, args.samples, args.seed)
    side = 1.0 / (args.beta - 1.0)
    counts, _, _ = np.histogram2d(
        pts[:, 1], pts[:, 0], bins=args.grid, range=[[0.0, side], [0.0, side]]
    )
    _write_pgm(args.out, counts)
    return EXIT_OK


def _cmd_density(args) -> int:
    beta = _make_beta(args.beta, None)
    if args.map == "random":
        selector = RandomMapSpec(args.p, args.s, args.t, beta)
    else:
        selector = args.map
    grid = build_ulam(selector, n=args.grid, samples=args.samples,
                      seed=args.seed, beta=beta)
    density = stationary_density(grid, tol=args.tol, maxiter=args.maxiter)
    if args.format == "csv":
        lines = ["cell_index,cx,cy,density"]
        for i in range(grid.ncells):
            cx, cy = grid.centroids[i]
            lines.append(f"{i},{float(cx)!r},{float(cy)!r},{float(density[i])!r}")
        args.out.write_text("\n".join(lines) + "\n")
    else:
        # average the two triangles of each grid square into one pixel
        n = grid.n
        pixel = np.zeros((n, n))
        weight = np.zeros((n, n))
        cx = np.clip((grid.centroids[:, 0] / grid.step).astype(int), 0, n - 1)
        cy = np.clip((grid.centroids[:, 1] / grid.step).astype(int), 0, n - 1)
        np.add.at(pixel, (cy, cx), density)
        np.add.at(weight, (cy, cx), 1.0)
        pixel[weight > 0] /= weight[weight > 0]
        _write_pgm(args.out, pixel)
    return EXIT_OK


def _cmd_orbit(args) -> int:
    beta = _make_beta(args.beta, args.regime)
    z = _parse_point(args.point)
    tapes = CoinTapes.from_strings(args.omega, args.upsilon)
    radial_mode = beta.regime is Regime.RADIAL
    steps = []
    digits = []
    for j in range(args.steps):
        if radial_mode:
            region = classify_radial(beta, z, depth=args.depth)
            tapes, z_next, d = kbeta_radial_step(beta, tapes, z, depth=args.depth)
            tag = RadialRegion(region).name
        else:
            region = classify_region(beta, z)
            tapes, z_next, d = kbeta_step(beta, tapes, z)
            tag = region.name
        steps.append(
            {
                "step": j,
                "region": tag,
                "digit": int(d),
                "k": tapes.k,
                "l": tapes.l,
                "point": [z_next[0], z_next[1]],
            }
        )
        digits.append(str(int(d)))
        z = z_next
    _emit_json(
        {
            "beta": beta.value,
            "regime": beta.regime.value,
            "digits": "".join(digits),
            "omega_used": tapes.k,
            "upsilon_used": tapes.l,
            "final": [z[0], z[1]],
            "steps": steps,
        },
        args.out,
    )
    return EXIT_OK


def _cmd_coins(args) -> int:
    beta = _make_beta(args.beta, args.regime)
    z = _parse_point(args.point)
    digits = _parse_digits(args.digits)
    coding = coins_from_digits(beta, z, digits, depth=args.depth)
    _emit_json(
        {
            "beta": beta.value,
            "regime": beta.regime.value,
            "omega": "".join(str(s) for s in coding.omega),
            "upsilon": "".join(str(s) for s in coding.upsilon),
            "visits": [[step, kind] for step, kind in coding.visits],
        },
        args.out,
    )
    return EXIT_OK


_COMMANDS = {
    "constants": _cmd_constants,
    "render": _cmd_render,
    "density": _cmd_density,
    "orbit": _cmd_orbit,
    "coins": _cmd_coins,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors; that code is reserved for
        # inadmissible digit input here
        return EXIT_OK if err.code == 0 else EXIT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except InadmissibleDigitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except TapeExhaustedError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_TAPE
    except NoConvergenceError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (GasketError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
