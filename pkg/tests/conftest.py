import math

import numpy as np
import pytest

from cktriangle.frame import build_frame
from cktriangle.projective import Polarity


@pytest.fixture(scope="session")
def pol_elliptic():
    return Polarity(1.0)


@pytest.fixture(scope="session")
def pol_hyperbolic():
    return Polarity(-1.0)


@pytest.fixture(scope="session")
def e3r(pol_elliptic):
    """Self-polar elliptic frame on the coordinate axes."""
    return build_frame([1, 0, 0], [0, 1, 0], [0, 0, 1], pol_elliptic)


@pytest.fixture(scope="session")
def hyp1(pol_hyperbolic):
    """Right-angled hyperbolic frame with both legs of length one."""
    c, s = math.cosh(1.0), math.sinh(1.0)
    return build_frame([1, 0, 0], [c, s, 0], [c, 0, s], pol_hyperbolic)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)


def random_elliptic_frame(rng, pol=Polarity(1.0)):
    while True:
        try:
            f = build_frame(rng.normal(size=3), rng.normal(size=3),
                            rng.normal(size=3), pol)
        except Exception:
            continue
        if abs(np.linalg.det(f.V)) > 0.05:
            return f


def random_disk_frame(rng, pol=Polarity(-1.0), radius=0.85):
    while True:
        pts = []
        while len(pts) < 3:
            xy = rng.uniform(-radius, radius, size=2)
            if xy @ xy < radius * radius:
                pts.append(np.array([1.0, xy[0], xy[1]]))
        try:
            f = build_frame(*pts, pol)
        except Exception:
            continue
        if abs(np.linalg.det(f.V)) > 0.02:
            return f


@pytest.fixture()
def elliptic_frame(rng):
    return random_elliptic_frame(rng)


@pytest.fixture()
def disk_frame(rng):
    return random_disk_frame(rng)
