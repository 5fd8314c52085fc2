"""Greedy, lazy and coin-driven digit expansions on fat Sierpinski gaskets.

The package covers the contraction family f_i(z) = (z + q_i)/beta with
digits q_0=(0,0), q_1=(1,0), q_2=(0,1) for 1 < beta <= beta_sup (~1.5437):
exact overlap partitions of the hull, the greedy/lazy/coin-driven step maps
and their codings, the radial-hole geometry past beta = 3/2, a six-branch
random map with Ulam-grid stationary densities, and the interval coding of
the coin process.
"""

from .cubic import Constants, constants, solve_cubic
from .errors import (
    BadConfigError,
    GasketError,
    InadmissibleDigitError,
    NoConvergenceError,
    NoSignChangeError,
    OutsideHullError,
    PointInHoleError,
    TapeExhaustedError,
    WrongRegimeError,
)
from .expansions import (
    CoinCoding,
    CoinTapes,
    ExpansionRecord,
    admissible_digits,
    coins_from_digits,
    expand,
    expansion_value,
    greedy_expansion,
    kbeta_step,
    lazy_expansion,
)
from .geometry import (
    Beta,
    Digit,
    Point,
    Regime,
    Region,
    chaos_game,
    classify_region,
    f_apply,
    f_inverse,
    greedy_step,
    in_hull,
    lazy_step,
    plane_less,
    psi,
    region_codes,
    uniform_hull_points,
)
from .measures import (
    GLSSpec,
    RandomMapSpec,
    UlamGrid,
    aggregate_density,
    apply_transfer,
    build_ulam,
    chain_probability,
    draw_branches,
    gls_digits,
    gls_step,
    gls_value,
    orbit_histogram,
    pushforward_compare,
    sample_R_orbit,
    split_coins,
    stationary_density,
    tau,
    tv_distance,
)
from .radial import (
    HoleChain,
    RadialRegion,
    affine_l,
    chain_vertices,
    classify_radial,
    default_depth,
    equilateral_vertex,
    g_apply,
    hole_membership,
    hole_triangle,
    kbeta_radial_step,
    triangle_contains_points,
    triangles_disjoint,
)

__version__ = "0.1.0"
