import numpy as np
import pytest

from fatgasket import Beta, region_codes, uniform_hull_points


@pytest.fixture
def beta14():
    return Beta(1.4)


@pytest.fixture
def beta15():
    return Beta(1.5)


@pytest.fixture
def beta152():
    return Beta(1.52)


def interior_points(beta: Beta, n: int, rng: np.random.Generator,
                    band: float = 1e-7) -> np.ndarray:
    """Uniform hull points at distance > band from every cut line and hull edge.

    Region membership is discontinuous across the cuts x = 1/beta,
    y = 1/beta and x + y = 1/(beta(beta-1)); tests that compare classifiers
    or conjugate orbits must not sample the discontinuity set.
    """
    b = beta.piece
    h = beta.split
    side = beta.side
    out = []
    need = n
    while need > 0:
        pts = uniform_hull_points(beta, max(2 * need, 1024), rng)
        x, y = pts[:, 0], pts[:, 1]
        s = x + y
        keep = (
            (x > band)
            & (y > band)
            & (s < side - band)
            & (np.abs(x - b) > band)
            & (np.abs(y - b) > band)
            & (np.abs(s - h) > band)
        )
        pts = pts[keep][:need]
        out.append(pts)
        need -= len(pts)
    return np.concatenate(out)


def scalar_points(pts: np.ndarray):
    return [(float(x), float(y)) for x, y in pts]


def region_histogram(beta: Beta, pts: np.ndarray) -> np.ndarray:
    return np.bincount(region_codes(beta, pts), minlength=7)
