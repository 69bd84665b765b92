import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cktriangle.errors import CoincidentPoints, DualDegeneracy
from cktriangle.projective import (
    Polarity,
    canonical,
    cross_ratio,
    dual,
    harmonic_conjugate,
    incidence_residual,
    is_isotropic_point,
    is_orthogonal,
    join,
    meet,
    par,
    ped,
    perp_line,
    perp_point,
    proj_equal,
)

finite = st.floats(min_value=-10, max_value=10, allow_nan=False)
vec3 = st.tuples(finite, finite, finite).filter(
    lambda v: max(abs(x) for x in v) > 1e-3)


def test_join_axes():
    assert proj_equal(join([1, 0, 0], [0, 1, 0]), [0, 0, 1])
    assert proj_equal(join([1, 1, 0], [1, -1, 0]), [0, 0, 1])


def test_join_coincident_raises():
    with pytest.raises(CoincidentPoints):
        join([1, 2, 3], [2, 4, 6])


def test_meet_axes():
    assert proj_equal(meet([0, 0, 1], [0, 1, 0]), [1, 0, 0])


def test_meet_of_joins_recovers_point(rng):
    p, q, r = rng.normal(size=(3, 3))
    x = meet(join(p, q), join(p, r))
    assert proj_equal(x, p)


@given(vec3, vec3)
@settings(max_examples=80, deadline=None)
def test_join_incidence(p, q):
    p = np.array(p)
    q = np.array(q)
    if proj_equal(p, q, 1e-6):
        return
    l = join(p, q)
    assert incidence_residual(l, p) < 1e-12
    assert incidence_residual(l, q) < 1e-12


def test_dual_examples():
    pol = Polarity(-1.0)
    assert proj_equal(dual([1, 0, 0], "point", pol), [1, 0, 0])
    pol2 = Polarity(2.0)
    assert proj_equal(dual([0, 1, 1], "line", pol2), [0, 1, 1])


@given(vec3, st.sampled_from([1.0, -1.0, 2.0, -0.5]))
@settings(max_examples=80, deadline=None)
def test_dual_involution(p, rho):
    pol = Polarity(rho)
    p = np.array(p)
    back = dual(dual(p, "point", pol), "line", pol)
    assert proj_equal(back, p, 1e-12)


@given(vec3, vec3, st.sampled_from([1.0, -1.0, 3.0]))
@settings(max_examples=60, deadline=None)
def test_join_meet_duality(p, q, rho):
    pol = Polarity(rho)
    p, q = np.array(p), np.array(q)
    if proj_equal(p, q, 1e-6):
        return
    lhs = dual(join(p, q), "line", pol)
    rhs = meet(dual(p, "point", pol), dual(q, "point", pol))
    assert proj_equal(lhs, rhs, 1e-9)


def test_orthogonality_symmetry(rng):
    pol = Polarity(-1.0)
    k = rng.normal(size=3)
    # Construct l orthogonal to k through the dual condition.
    l = np.cross(np.array([pol.rho * k[0] * 0 + k[0], pol.rho * k[1],
                           pol.rho * k[2]]), rng.normal(size=3))
    if is_orthogonal(k, l, "lines", pol):
        assert is_orthogonal(l, k, "lines", pol)
    assert is_orthogonal([1, 0, 0], [0, 1, 0], "points", Polarity(5.0))


def test_isotropy_band():
    pol = Polarity(-1.0)
    assert is_isotropic_point([1, 1, 0], pol)
    assert not is_isotropic_point([1, 0.5, 0], pol)


def test_orthogonality_transfers_to_duals(rng):
    pol = Polarity(-2.0)
    p, q = rng.normal(size=(2, 3))
    q = q - pol.point_form(p, q) / pol.point_form(p, p) * p
    assert is_orthogonal(p, q, "points", pol)
    assert is_orthogonal(dual(p, "point", pol), dual(q, "point", pol),
                         "lines", pol)


def test_perp_constructions():
    pol = Polarity(1.0)
    l = np.array([0.0, 0.0, 1.0])
    p = np.array([0.0, 1.0, 0.0])
    assert proj_equal(perp_line(l, p, pol), [1, 0, 0])
    with pytest.raises(DualDegeneracy):
        perp_line([1.0, 0, 0], [1.0, 0, 0], pol)


def test_ped_and_par_incidences(rng):
    pol = Polarity(-1.0)
    l = rng.normal(size=3)
    p = rng.normal(size=3)
    foot = ped(p, l, pol)
    assert incidence_residual(l, foot) < 1e-10
    assert incidence_residual(perp_line(l, p, pol), foot) < 1e-10
    through = par(l, p, pol)
    assert incidence_residual(through, p) < 1e-10
    assert is_orthogonal(through, perp_line(l, p, pol), "lines", pol, 1e-9)


def test_harmonic_conjugate_reference():
    d = harmonic_conjugate([1, 0, 0], [0, 1, 0], [1, 1, 0])
    assert proj_equal(d, [1, -1, 0])
    assert abs(cross_ratio([1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]) + 1) < 1e-12


def test_cross_ratio_projective_invariance(rng):
    p, q = rng.normal(size=(2, 3))
    ts = rng.normal(size=4)
    pts = [p + t * q for t in ts]
    cr1 = cross_ratio(*pts)
    m = rng.normal(size=(3, 3))
    m += 3 * np.eye(3)
    cr2 = cross_ratio(*[m @ x for x in pts])
    assert abs(cr1 - cr2) < 1e-8


def test_canonical_idempotent_and_sign(rng):
    v = rng.normal(size=3)
    c1 = canonical(v)
    assert np.allclose(canonical(c1), c1)
    assert np.allclose(canonical(-v), c1)
    assert np.max(np.abs(c1)) == pytest.approx(1.0)
