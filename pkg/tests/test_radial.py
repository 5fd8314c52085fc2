import math

import numpy as np
import pytest
from scipy.spatial import cKDTree

from fatgasket import (
    Beta,
    CoinTapes,
    Digit,
    HoleChain,
    NoSignChangeError,
    PointInHoleError,
    RadialRegion,
    WrongRegimeError,
    affine_l,
    chain_vertices,
    chaos_game,
    classify_radial,
    constants,
    default_depth,
    equilateral_vertex,
    f_apply,
    g_apply,
    hole_membership,
    hole_triangle,
    kbeta_radial_step,
    solve_cubic,
    triangle_contains_points,
    triangles_disjoint,
)
from fatgasket.radial import (
    find_hole_chain,
    hull_triangle,
    map_triangle,
    points_in_eroded_triangle,
    triangle_inradius,
)


def _poly(c3, c2, c1, c0, x):
    return ((c3 * x + c2) * x + c1) * x + c0


# ---------------------------------------------------------------------------
# cubic roots
# ---------------------------------------------------------------------------

def test_solve_cubic_reproduces_published_values():
    assert solve_cubic(1, -1, 0, -1, 1, 2) == pytest.approx(1.4656, abs=5e-5)
    assert solve_cubic(1, -2, 2, -2, 1, 2) == pytest.approx(1.5437, abs=5e-5)
    assert solve_cubic(1, -1, 1, -0.5, 0, 1) == pytest.approx(0.6478, abs=5e-5)


def test_solve_cubic_residuals():
    for args in ((1, -1, 0, -1, 1, 2), (1, -2, 2, -2, 1, 2), (1, -1, 1, -0.5, 0, 1)):
        root = solve_cubic(*args)
        assert abs(_poly(*args[:4], root)) < 1e-12


def test_solve_cubic_requires_sign_change():
    with pytest.raises(NoSignChangeError):
        solve_cubic(1, 0, 0, 1, 0.0, 1.0)  # x^3 + 1 is positive on [0, 1]


def test_constants_ranges_and_consistency():
    c = constants()
    assert 1.46 < c.beta_star < 1.47
    assert 1.54 < c.beta_sup < 1.55
    assert 0.64 < c.lambda_star < 0.65
    assert abs(c.lambda_star * c.beta_sup - 1.0) < 1e-4


# ---------------------------------------------------------------------------
# the central hole
# ---------------------------------------------------------------------------

def test_hole_triangle_substitution(beta152):
    b = 1 / 1.52
    h = 1 / (1.52 * 0.52)
    v = hole_triangle(beta152)
    assert v[0] == pytest.approx((b, b), abs=1e-15)
    assert v[1] == pytest.approx((b, h - b), abs=1e-15)
    assert v[2] == pytest.approx((h - b, b), abs=1e-15)
    # vertices satisfy the closures of the defining inequalities
    for x, y in v:
        assert x <= b + 1e-12 and y <= b + 1e-12 and x + y >= h - 1e-12


def test_hole_degenerates_at_regime_boundary():
    spreads = []
    for bval in (1.52, 1.505, 1.5001):
        beta = Beta(bval)
        v = np.array(hole_triangle(beta))
        spreads.append(np.linalg.norm(v[1] - v[2]))
    assert spreads[0] > spreads[1] > spreads[2]
    assert spreads[2] < 1e-3


def test_hole_triangle_wrong_regime(beta14):
    with pytest.raises(WrongRegimeError):
        hole_triangle(beta14)
    with pytest.raises(WrongRegimeError):
        classify_radial(beta14, (0.1, 0.1))


def test_hole_membership_examples(beta152):
    cen = tuple(np.array(hole_triangle(beta152)).mean(axis=0))
    for j in (0, 1, 2):
        assert hole_membership(beta152, cen, HoleChain(None, j, 0))
    z = f_apply(beta152, Digit.Q1, f_apply(beta152, Digit.Q0, cen))
    assert hole_membership(beta152, z, HoleChain(1, 0, 1))
    for chain in (HoleChain(None, 0, 0), HoleChain(None, 1, 3), HoleChain(2, 0, 2)):
        assert not hole_membership(beta152, (0.0, 0.0), chain)


# ---------------------------------------------------------------------------
# corrected partition
# ---------------------------------------------------------------------------

def test_classify_radial_examples(beta152):
    cen = tuple(np.array(hole_triangle(beta152)).mean(axis=0))
    assert classify_radial(beta152, cen) is RadialRegion.HOLE
    z = f_apply(beta152, Digit.Q1, f_apply(beta152, Digit.Q0, cen))
    assert classify_radial(beta152, z) is RadialRegion.E0
    assert classify_radial(beta152, (0.0, 0.0)) is RadialRegion.E0


def test_classify_radial_hole_chains(beta152):
    cen = tuple(np.array(hole_triangle(beta152)).mean(axis=0))
    # pure chains f_i^n(H) are holes inside the matching single-cover band
    for i in (0, 1, 2):
        z = cen
        for n in range(1, 6):
            z = f_apply(beta152, Digit(i), z)
            assert classify_radial(beta152, z) is RadialRegion.HOLE
    # covered chains force the inner digit
    for i, j, want in ((0, 1, RadialRegion.E1), (2, 1, RadialRegion.E1),
                       (1, 2, RadialRegion.E2), (0, 2, RadialRegion.E2),
                       (2, 0, RadialRegion.E0)):
        z = cen
        for _ in range(2):
            z = f_apply(beta152, Digit(j), z)
        z = f_apply(beta152, Digit(i), z)
        assert classify_radial(beta152, z) is want


def test_find_hole_chain(beta152):
    cen = tuple(np.array(hole_triangle(beta152)).mean(axis=0))
    z = f_apply(beta152, Digit.Q1, f_apply(beta152, Digit.Q0, f_apply(beta152, Digit.Q0, cen)))
    chain = find_hole_chain(beta152, z)
    assert chain == HoleChain(1, 0, 2)
    assert find_hole_chain(beta152, (1 / 1.52, 0.0)) is None


def test_default_depth_scaling(beta152):
    d = default_depth(beta152)
    diam = beta152.side * math.sqrt(2.0)
    assert diam / beta152.value**d <= 1e-9 < diam / beta152.value ** (d - 1)


# ---------------------------------------------------------------------------
# radial coin-driven step
# ---------------------------------------------------------------------------

def test_kbeta_radial_step_examples(beta152):
    tapes = CoinTapes.from_strings("1", "")
    out, z, d = kbeta_radial_step(beta152, tapes, (0.0, 0.0))
    assert d is Digit.Q0 and z == (0.0, 0.0) and out.k == 0

    out, z, d = kbeta_radial_step(beta152, tapes, (1 / 1.52, 0.0))
    assert d is Digit.Q1 and out.k == 1

    cen = tuple(np.array(hole_triangle(beta152)).mean(axis=0))
    forced = f_apply(beta152, Digit.Q1, f_apply(beta152, Digit.Q0, cen))
    out, z, d = kbeta_radial_step(beta152, CoinTapes(), forced)
    assert d is Digit.Q0 and out.k == 0  # forced digit, no coin spent

    with pytest.raises(PointInHoleError):
        kbeta_radial_step(beta152, tapes, cen)


# ---------------------------------------------------------------------------
# affine equivalence with the rotated system
# ---------------------------------------------------------------------------

def test_affine_l_on_vertices(beta152):
    assert affine_l(beta152, equilateral_vertex(0)) == pytest.approx((0.0, 0.0), abs=1e-12)
    side = 1.0 / (beta152.value - 1.0)
    assert affine_l(beta152, equilateral_vertex(1)) == pytest.approx((side, 0.0), abs=1e-12)
    assert affine_l(beta152, equilateral_vertex(2)) == pytest.approx((0.0, side), abs=1e-12)


def test_affine_conjugacy(beta152):
    lam = 1.0 / beta152.value
    rng = np.random.default_rng(31)
    pts = rng.uniform(-1.0, 1.0, size=(10_000, 2))
    for x, y in pts:
        z = (float(x), float(y))
        for i in (0, 1, 2):
            a = f_apply(beta152, Digit(i), affine_l(beta152, z))
            b = affine_l(beta152, g_apply(lam, i, z))
            assert abs(a[0] - b[0]) < 1e-9 and abs(a[1] - b[1]) < 1e-9


# ---------------------------------------------------------------------------
# radial structure: containment, disjointness, contraction
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("bval", [1.51, constants().beta_sup])
def test_chain_containment_and_disjointness(bval):
    beta = Beta(bval)
    hull = np.array(hull_triangle(beta))
    for n in range(2, 7):
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                t1 = chain_vertices(beta, HoleChain(i, j, n - 1))
                assert triangle_contains_points(map_triangle(beta, j, hull), t1, tol=1e-12)
                t2 = chain_vertices(beta, HoleChain(j, i, n - 1))
                assert triangles_disjoint(t1, t2, tol=1e-12)


def test_chain_contraction(beta152):
    hole = np.array(hole_triangle(beta152))
    diam0 = max(np.linalg.norm(hole[a] - hole[b]) for a in range(3) for b in range(3))
    for n in range(1, 9):
        tri = chain_vertices(beta152, HoleChain(None, 1, n))
        diam = max(np.linalg.norm(tri[a] - tri[b]) for a in range(3) for b in range(3))
        assert diam == pytest.approx(diam0 / beta152.value**n, rel=1e-12)


def test_attractor_avoids_holes(beta152):
    pts = chaos_game(beta152.value, 200_000, seed=33)
    hole = np.array(hole_triangle(beta152))
    assert not points_in_eroded_triangle(hole, pts, 1e-3).any()
    for i in (0, 1, 2):
        for n in range(1, 9):
            tri = chain_vertices(beta152, HoleChain(None, i, n))
            assert not points_in_eroded_triangle(tri, pts, 1e-3).any()


def test_forced_digit_contradiction(beta152):
    """Taking the not-forced digit on a covered chain leaves the attractor.

    The image then sits at the centre of a genuine hole, at distance at least
    the scaled hole inradius from every attractor point.
    """
    sample = chaos_game(beta152.value, 1_000_000, seed=34)
    tree = cKDTree(sample)
    hole = np.array(hole_triangle(beta152))
    r_hole = triangle_inradius(hole)
    bv = beta152.value
    for i, j in ((0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)):
        for n in (1, 2, 3):
            cen = chain_vertices(beta152, HoleChain(i, j, n)).mean(axis=0)
            assert classify_radial(beta152, tuple(cen)) is RadialRegion(j)
            # wrong digit i: the pulled-back point lands in the hole f_j^n(H),
            # at least the scaled inradius away from the attractor
            wrong = bv * cen - np.array(Digit(i).vector)
            dist_wrong = tree.query(wrong)[0]
            min_gap = r_hole / bv**n
            assert dist_wrong > 0.5 * min_gap
            # the forced digit j keeps the orbit on the attractor (up to the
            # finite-sample spacing of the chaos-game cloud)
            right = bv * cen - np.array(Digit(j).vector)
            dist_right = tree.query(right)[0]
            assert dist_right < dist_wrong
            assert dist_right < 5e-3


def test_triangle_predicates():
    t1 = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    t2 = np.array([[2.0, 2.0], [3.0, 2.0], [2.0, 3.0]])
    assert triangles_disjoint(t1, t2)
    assert not triangles_disjoint(t1, t1 + 0.1)
    assert triangle_contains_points(t1, np.array([[0.2, 0.2], [0.0, 0.0]]))
    assert not triangle_contains_points(t1, np.array([[0.8, 0.8]]))
    assert triangle_inradius(t1) == pytest.approx((2 - math.sqrt(2)) / 2, rel=1e-12)
