import math

import numpy as np
import pytest

from cktriangle import circles as ci
from cktriangle import conics as co
from cktriangle.centers import CENTERS, center, evaluate
from cktriangle.errors import DegenerateStart, GeometryError
from cktriangle.frame import (
    bary_distance,
    bary_join,
    bary_meet,
    bary_ped,
    cevian_triple,
    cosh_distance,
    perspector,
    symmedian_point,
    tripolar,
)
from cktriangle.measure import Measure
from cktriangle.projective import cross_ratio, proj_equal
from tests.conftest import random_disk_frame, random_elliptic_frame


@pytest.fixture()
def small_elliptic(rng):
    from cktriangle.projective import Polarity
    from cktriangle.frame import build_frame

    while True:
        pts = [np.array([1.0, *rng.uniform(-0.45, 0.45, size=2)]) for _ in range(3)]
        try:
            f = build_frame(*pts, Polarity(1.0))
        except GeometryError:
            continue
        if abs(np.linalg.det(f.V)) > 0.004:
            return f


def test_power_on_circle_and_center(small_elliptic, rng):
    f = small_elliptic
    circ = ci.circumcircle(f)
    res = ci.power(f, f.vertex_bary[0], circ)
    assert abs(res.p) < 1e-10
    res_c = ci.power(f, circ.center, circ)
    expected = -np.tanh(np.arccosh(circ.cosh_r + 0j) / 2) ** 2
    assert abs(res_c.p - expected) < 1e-9


def test_power_secant_invariance(small_elliptic, rng):
    f = small_elliptic
    circ = ci.circumcircle(f)
    p = f.to_bary(rng.normal(size=3))
    base = ci.power(f, p, circ).p
    vals = []
    for _ in range(20):
        lam = np.cross(p, rng.normal(size=3))
        v = ci.secant_power(f, p, circ, lam)
        if v is not None:
            vals.append(v)
    assert len(vals) >= 8
    assert max(abs(v - vals[0]) for v in vals) < 1e-9
    assert min(abs(vals[0] - base), abs(vals[0] + base)) < 1e-9


def test_radical_lines_properties(small_elliptic, rng):
    f = small_elliptic
    c1 = ci.circumcircle(f)
    c2 = ci.Circle.about_lax(f, f.to_bary(rng.normal(size=3)), f.vertex_bary[1])
    l1, l2 = ci.radical_lines(f, c1, c2)
    assert ci.modified_power_spread(f, l1, [c1, c2], rng=rng) < 1e-9
    assert ci.modified_power_spread(f, l2, [c1, c2], rng=rng) < 1e-9
    m1d = f.bary_dual_point(c1.center)
    m2d = f.bary_dual_point(c2.center)
    assert abs(cross_ratio(l1, l2, m1d, m2d) + 1) < 1e-8


def test_radical_lines_equal_radii(small_elliptic):
    f = small_elliptic
    from cktriangle.measure import semi_midpoints

    a = f.vertex_bary[0]
    b = f.vertex_bary[1]
    p = f.to_bary(rng_point := f.from_bary([1.0, 1.0, 2.0]))
    c1 = ci.Circle.about_lax(f, a, p)
    k = co.circle_with_cosh2_radius(f, b, (c1.cosh_r ** 2).real)
    c2 = ci.Circle(conic=k, center=b, cosh_r=c1.cosh_r)
    l1, l2 = ci.radical_lines(f, c1, c2)
    plus, minus, _ = semi_midpoints(f.from_bary(a), f.from_bary(b), f.pol)
    hits = {0, 1}
    for lam in (l1, l2):
        on_plus = abs(lam @ f.to_bary(plus)) < 1e-8 * np.linalg.norm(lam)
        on_minus = abs(lam @ f.to_bary(minus)) < 1e-8 * np.linalg.norm(lam)
        assert on_plus or on_minus


def test_radical_centers_special_values(small_elliptic, rng):
    f = small_elliptic
    a_, b_, c_ = f.sides
    assert proj_equal(ci.radical_centers(f, Measure(0, 0.3), Measure(0, 0.3),
                                         Measure(0, 0.3))[0],
                      center("circumcenter", f), 1e-9)
    assert proj_equal(ci.radical_centers(f, a_, b_, c_)[0],
                      center("de_longchamps", f), 1e-9)
    s = 0.5 * (a_.as_complex() + b_.as_complex() + c_.as_complex())

    def as_m(z):
        return Measure(z.real, z.imag)

    got = ci.radical_centers(f, as_m(s - a_.as_complex()),
                             as_m(s - b_.as_complex()),
                             as_m(s - c_.as_complex()))[0]
    assert proj_equal(got, center("incenter", f), 1e-9)


def test_similitude_tangent_incidence(small_elliptic, rng):
    f = small_elliptic
    c1 = ci.circumcircle(f)
    c2 = ci.Circle.about_lax(f, f.to_bary(rng.normal(size=3)), f.vertex_bary[1])
    s1, s2 = ci.similitude_centers(f, c1, c2)
    lam = bary_join(c1.center, c2.center)
    for s in (s1, s2):
        assert abs(lam @ s) < 1e-8 * np.linalg.norm(lam) * np.linalg.norm(s)
    assert abs(cross_ratio(c1.center, c2.center, s1, s2) + 1) < 1e-7
    for t in co.common_tangents(c1.conic, c2.conic, f):
        r1 = abs(t @ s1) / (np.linalg.norm(t) * np.linalg.norm(s1))
        r2 = abs(t @ s2) / (np.linalg.norm(t) * np.linalg.norm(s2))
        assert min(r1, r2) < 1e-6


def test_antiparallel_mirror_and_random(elliptic_frame, rng):
    from cktriangle.frame import bary_reflect_line

    f = elliptic_frame
    i0 = center("incenter", f)
    bis = bary_join(f.vertex_bary[0], i0)
    g = bary_join(f.vertex_bary[0], f.to_bary(rng.normal(size=3)))
    h = bary_reflect_line(f, bis, g)
    assert ci.antiparallel(f, g, h, 0)
    g2 = f.line_to_bary(np.cross(rng.normal(size=3), rng.normal(size=3)))
    h2 = f.line_to_bary(np.cross(rng.normal(size=3), rng.normal(size=3)))
    assert not ci.antiparallel(f, g2, h2, 0)


def test_tucker_hexagon_full(elliptic_frame, rng):
    f = elliptic_frame
    hexg = None
    for q in (0.8, 1.4, 0.45, -0.8, 2.2):
        try:
            hexg = ci.tucker_hexagon(f, q)
            break
        except GeometryError:
            continue
    assert hexg is not None
    res, _ = co.concyclicity_residual(list(hexg.points()), f)
    assert res < 1e-8
    o = center("circumcenter", f)
    kt = evaluate(CENTERS["lemoine"], f)
    lam = bary_join(o, kt)
    assert abs(lam @ hexg.center) < 1e-9 * np.linalg.norm(lam) * np.linalg.norm(hexg.center)
    rt, tt = ci.tucker_r_t_triples(f, hexg)
    for triple in (rt, tt):
        got = perspector(list(triple), f.vertex_bary)
        assert got is not None and proj_equal(got, kt, 1e-8)
    # Closing side antiparallel to its sideline; chain alternates.
    assert ci.antiparallel(f, bary_join(hexg.q3, hexg.p1), f.sideline_bary[1], 1)
    assert ci.parallel_wrt_angle(f, bary_join(hexg.p2, hexg.q3),
                                 f.sideline_bary[0], 0)


def test_tucker_degenerate_start(elliptic_frame):
    with pytest.raises(DegenerateStart):
        ci.tucker_hexagon(elliptic_frame, 0.0)


def test_lemoine_circles(small_elliptic):
    f = small_elliptic
    for n in (1, 2):
        hexg = ci.lemoine_circle(f, n)
        res, _ = co.concyclicity_residual(list(hexg.points()), f)
        assert res < 1e-8
        kt = evaluate(CENTERS["lemoine"], f)
        for lam in ci._lemoine_sides(hexg, n):
            assert abs(lam @ kt) < 1e-8 * np.linalg.norm(lam) * np.linalg.norm(kt)
    hex3 = ci.lemoine_circle(f, 3)
    res, _ = co.concyclicity_residual(list(hex3.points()), f)
    assert res < 1e-7
    o = center("circumcenter", f)
    kt = evaluate(CENTERS["lemoine"], f)
    lam = bary_join(o, kt)
    assert abs(lam @ hex3.center) < 1e-7 * np.linalg.norm(lam) * np.linalg.norm(hex3.center)


def test_conway_circle(small_elliptic):
    f = small_elliptic
    pts, circ = ci.conway_circle(f)
    i0 = center("incenter", f)
    for p in pts:
        assert circ.conic.residual(p) < 1e-9
    a_, b_, c_ = (m.as_complex() for m in f.sides)
    s = 0.5 * (a_ + b_ + c_)
    rin = cosh_distance(f, i0, bary_ped(f, i0, f.sideline_bary[0]))
    assert abs(circ.cosh_r - np.cosh(s) * rin) < 1e-9
    r23, r32, r31, r13, r12, r21 = pts
    meets = [
        bary_meet(bary_join(r23, r32), f.sideline_bary[0]),
        bary_meet(bary_join(r31, r13), f.sideline_bary[1]),
        bary_meet(bary_join(r12, r21), f.sideline_bary[2]),
    ]
    m = np.stack([q / np.linalg.norm(q) for q in meets])
    assert abs(np.linalg.det(m)) < 1e-8


def test_hart_circle_suite(small_elliptic):
    f = small_elliptic
    hc = ci.hart_circle(f)
    exc = ci.excircles(f)
    for e in exc:
        assert co.tangency_residual(hc.conic, e.conic) < 1e-7
    cc = ci.circumcircle(f)
    rh = hc.radius(f).as_complex()
    rr = cc.radius(f).as_complex()
    assert abs(np.tanh(rh) - 0.5 * np.tanh(rr)) < 1e-9
    fps = ci.feuerbach_points(f)
    for k in range(4):
        assert exc[k].conic.residual(fps[k]) < 1e-9
        assert hc.conic.residual(fps[k]) < 1e-9
    got = perspector(list(fps[1:]), f.vertex_bary)
    assert got is not None and proj_equal(got, center("x12_point", f), 1e-8)


def test_akopyan_suite(small_elliptic):
    f = small_elliptic
    from cktriangle.frame import area
    from cktriangle.centers import subframe

    ax = ci.akopyan_line(f)
    names = ("equal_area_point", "pseudo_orthocenter", "hart_center", "circumcenter")
    pts = [center(n, f) for n in names]
    for p in pts:
        assert abs(ax @ p) < 1e-9 * np.linalg.norm(ax) * np.linalg.norm(p)
    gh, hh, nh, o = pts
    assert abs(cross_ratio(hh, gh, nh, o) + 1) < 1e-8
    total = sum(ci.akopyan_measure(f, i) for i in range(3))
    assert abs(total - (0.5 * area(f, 0) + complex(0, 2 * math.pi))) < 1e-10
    tr = cevian_triple(f, gh)
    e = f.vertex_bary
    for i, (j, k) in enumerate(((1, 2), (2, 0), (0, 1))):
        h1 = area(subframe(f, e[i], e[j], tr[i]), 0)
        h2 = area(subframe(f, e[i], tr[i], e[k]), 0)
        assert abs(h1 - h2) < 1e-8


def test_apollonian_circles(small_elliptic, rng):
    f = small_elliptic
    circs = ci.apollonian_circles(f)
    c0 = ci.circumcircle(f)
    for c in circs:
        cd = cosh_distance(f, c.center, c0.center)
        rhs = c.cosh_r * c0.cosh_r
        assert min(abs(cd - rhs), abs(cd + rhs)) < 1e-8
    jp = center("isodynamic_plus", f)
    jm = center("isodynamic_minus", f)
    for c in circs:
        assert c.conic.residual(jp) < 1e-8
        assert c.conic.residual(jm) < 1e-8
    kt = evaluate(CENTERS["lemoine"], f)
    assert abs(cross_ratio(jm, jp, center("circumcenter", f), kt) + 1) < 1e-8


def test_extangents(small_elliptic):
    f = small_elliptic
    exc = ci.excircles(f)
    lines = ci.extangent_lines(f)
    for i, (j, k) in enumerate(((2, 3), (3, 1), (1, 2))):
        assert co.line_tangency_residual(exc[j].conic, lines[i]) < 1e-10
        assert co.line_tangency_residual(exc[k].conic, lines[i]) < 1e-10
    tri = ci.extangents_triple(f)
    got = perspector(list(tri), f.vertex_bary)
    assert got is not None and proj_equal(got, center("x65_point", f), 1e-8)


def test_lobachevsky_circles_smoke(rng):
    f = random_disk_frame(rng)
    circ = ci.circumcircle(f)
    assert circ.conic.residual(f.vertex_bary[2]) < 1e-10
    ic = ci.incircle(f)
    for lam in f.sideline_bary:
        assert co.line_tangency_residual(ic.conic, lam) < 1e-9
    hexg = None
    for q in (0.7, 1.3, 0.4, 2.0):
        try:
            hexg = ci.tucker_hexagon(f, q)
            break
        except GeometryError:
            continue
    assert hexg is not None
    res, _ = co.concyclicity_residual(list(hexg.points()), f)
    assert res < 1e-8
