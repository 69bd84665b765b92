import math

import numpy as np
import pytest

from cktriangle import conics as co
from cktriangle import cubics as cu
from cktriangle.centers import CENTERS, center, evaluate, orthocorrespondent
from cktriangle.errors import GeometryError
from cktriangle.frame import (
    anticevian_triple,
    bary_join,
    cevian_triple,
    dual_frame,
    isogonal,
    isotomic,
    pedal_triple,
    perspectivity_residual,
    perspector,
    build_frame,
)
from cktriangle.measure import Measure, line_distance
from cktriangle.projective import Polarity, proj_equal
from tests.conftest import random_disk_frame


DARBOUX_MEMBER_IDS = ("pseudo_circumcenter", "orthocenter", "de_longchamps",
                      "bevan")
LUCAS_MEMBER_IDS = ("double_point", "orthocenter", "de_longchamps")
THOMSON_MEMBER_IDS = ("orthocenter", "pseudo_circumcenter", "double_point")
NEUBERG_MEMBER_IDS = ("orthocenter", "pseudo_circumcenter", "orthostar",
                      "isodynamic_plus", "isodynamic_minus", "evans",
                      "neuberg_w2", "neuberg_w3")


def test_darboux_membership(elliptic_frame):
    f = elliptic_frame
    dar = cu.cubic("darboux", f)
    pts = [center(cid, f) for cid in DARBOUX_MEMBER_IDS]
    pts += [center("circumcenter", f, k) for k in range(4)]
    pts += [center("incenter", f, k) for k in range(4)]
    pts += [f.Dmat[i] for i in range(3)]
    for p in pts:
        assert dar.residual(p) < 1e-8
    for cid in DARBOUX_MEMBER_IDS:
        assert dar.residual(isogonal(f, center(cid, f))) < 1e-8


def test_lucas_membership(elliptic_frame):
    f = elliptic_frame
    luc = cu.cubic("lucas", f)
    pts = [center(cid, f) for cid in LUCAS_MEMBER_IDS]
    for k in range(4):
        pts += [center("centroid", f, k), center("gergonne", f, k),
                center("nagel", f, k)]
    for p in pts:
        assert luc.residual(p) < 1e-8
        assert luc.residual(isotomic(f, p)) < 1e-8


def test_thomson_membership(disk_frame):
    f = disk_frame
    tho = cu.cubic("thomson", f)
    pts = [center(cid, f) for cid in THOMSON_MEMBER_IDS]
    for k in range(4):
        pts += [center("incenter", f, k), center("lemoine", f, k),
                center("lemoine_conjugate", f, k)]
    for p in pts:
        assert tho.residual(p) < 1e-8


def test_neuberg_membership(elliptic_frame):
    f = elliptic_frame
    neu = cu.cubic("neuberg", f)
    for cid in NEUBERG_MEMBER_IDS:
        p = center(cid, f)
        assert neu.residual(p) < 1e-8
        assert neu.residual(isogonal(f, p)) < 1e-8
    for k in range(4):
        assert neu.residual(center("incenter", f, k)) < 1e-8


def test_membership_rejects_random(elliptic_frame, rng):
    dar = cu.cubic("darboux", elliptic_frame)
    ok, res = cu.membership(rng.normal(size=3) + 4.0, dar)
    assert not ok and res > 1e-4
    for v in elliptic_frame.vertex_bary:
        assert cu.cubic("lucas", elliptic_frame).residual(v) < 1e-12


def test_pivotal_law(elliptic_frame, rng):
    f = elliptic_frame
    for kind in ("darboux", "lucas", "thomson", "neuberg", "pk_w4_w5",
                 "pk_k_nplus"):
        cub = cu.cubic(kind, f)
        pts = cu.sample_on_cubic(cub, rng, 8)
        assert len(pts) >= 4
        for p in pts:
            if min(abs(v) for v in p) < 1e-6:
                continue
            assert cu.pivotal_law_residual(cub, f, p) < 1e-8


def test_darboux_is_pedal_cevian_locus(elliptic_frame, rng):
    f = elliptic_frame
    dar = cu.cubic("darboux", f)
    for p in cu.sample_on_cubic(dar, rng, 5):
        try:
            trip = pedal_triple(f, p)
        except GeometryError:
            continue
        assert perspectivity_residual(list(trip), f.vertex_bary) < 1e-7


def test_lucas_is_cevian_pedal_locus(elliptic_frame, rng):
    f = elliptic_frame
    luc = cu.cubic("lucas", f)
    duals = [f.Dmat[i] for i in range(3)]
    for p in cu.sample_on_cubic(luc, rng, 5):
        if min(abs(v) for v in p) < 1e-8:
            continue
        trip = cevian_triple(f, p)
        assert perspectivity_residual(list(trip), duals) < 1e-7


def test_darboux_companions(elliptic_frame):
    f = elliptic_frame
    pairs = [
        ("circumcenter", center("centroid", f)),
        ("incenter", center("gergonne", f)),
        ("pseudo_circumcenter", center("double_point", f)),
        ("bevan", center("nagel", f)),
        ("de_longchamps", isotomic(f, center("orthocenter", f))),
    ]
    for cid, tgt in pairs:
        trip = pedal_triple(f, center(cid, f))
        got = perspector(list(trip), f.vertex_bary)
        assert got is not None and proj_equal(got, tgt, 1e-8)


def test_x1498_pedal_companion(elliptic_frame):
    f = elliptic_frame
    duals = [f.Dmat[i] for i in range(3)]
    l = center("de_longchamps", f)
    got = perspector(list(cevian_triple(f, l)), duals)
    x1498 = center("x1498_point", f)
    assert got is not None and proj_equal(got, x1498, 1e-8)
    assert cu.cubic("darboux", f).residual(x1498) < 1e-10


def test_thomson_center_variant(disk_frame, rng):
    f = disk_frame
    assert cu.thomson_center_locus_test(f, center("orthocenter", f))
    for k in range(4):
        assert cu.thomson_center_locus_test(f, center("circumcenter", f, k))
        assert cu.thomson_center_locus_test(f, center("incenter", f, k))
    assert not cu.thomson_center_locus_test(f, f.to_bary(rng.normal(size=3)))


def test_orthology(elliptic_frame, rng):
    f = elliptic_frame
    s = f.to_bary(rng.normal(size=3))
    res = cu.orthology(f, pedal_triple(f, s))
    assert res is not None
    s_got, t_got = res
    assert proj_equal(s_got, s, 1e-8)
    assert proj_equal(t_got, isogonal(f, s), 1e-8)
    random_triple = [f.to_bary(rng.normal(size=3)) for _ in range(3)]
    assert cu.orthology(f, random_triple) is None


def test_reflection_cubic(elliptic_frame, rng):
    f = elliptic_frame
    rc = cu.reflection_collinearity_cubic(f)
    for p in cu.sample_on_cubic(rc, rng, 4):
        trip = cu.reflection_triple(f, p)
        m = np.stack([q / np.linalg.norm(q) for q in trip])
        assert abs(np.linalg.det(m)) < 1e-8


def test_reflection_circumcenter_isogonal(elliptic_frame, rng):
    from cktriangle.centers import subframe

    f = elliptic_frame
    p = f.to_bary(rng.normal(size=3))
    trip = cu.reflection_triple(f, p)
    sub = subframe(f, *trip)
    tgt = isogonal(f, p)
    gaps = []
    for k in range(4):
        got = f.to_bary(sub.from_bary(center("circumcenter", sub, k)))
        gaps.append(proj_equal(got, tgt, 1e-8))
    assert any(gaps)


def test_cevian_quotient_perspector(elliptic_frame, rng):
    f = elliptic_frame
    p = f.to_bary(rng.normal(size=3))
    anc = anticevian_triple(f, p)
    trip = cu.reflection_triple(f, p)
    got = perspector(list(anc), list(trip))
    assert got is not None
    assert proj_equal(got, cu.cevian_quotient_perspector(f, p), 1e-8)


def test_neuberg_maps(elliptic_frame):
    f = elliptic_frame
    pairs = [("pseudo_circumcenter", "pseudo_ninepoint"),
             ("incenter", "w6_point"), ("evans", "w7_point")]
    for src, dst in pairs:
        got = cu.neuberg_forward(f, center(src, f))
        assert got is not None and proj_equal(got, center(dst, f), 1e-7)
    pairs2 = [("w9_point", "pseudo_circumcenter"), ("w10_point", "incenter"),
              ("pseudo_ninepoint", "orthostar")]
    for src, dst in pairs2:
        got = cu.neuberg_reverse(f, center(src, f))
        assert got is not None and proj_equal(got, center(dst, f), 1e-7)


def test_pseudoparallel_lemmas(elliptic_frame, rng):
    f = elliptic_frame
    q = np.abs(rng.normal(size=3)) + 0.3
    anc = anticevian_triple(f, q)
    assert proj_equal(cu.pseudoparallel_perspector(f, anc, q), q, 1e-10)
    r = np.abs(rng.normal(size=3)) + 0.3
    t = rng.uniform(0.3, 1.0, size=3)
    shifted = [r + t[0] * np.eye(3)[0], r + t[1] * np.eye(3)[1],
               r + t[2] * np.eye(3)[2]]
    pts = [
        np.cross(np.cross(shifted[1], shifted[2]), f.sideline_bary[0]),
        np.cross(np.cross(shifted[2], shifted[0]), f.sideline_bary[1]),
        np.cross(np.cross(shifted[0], shifted[1]), f.sideline_bary[2]),
    ]
    lam = np.array([t[1] * t[2], t[2] * t[0], t[0] * t[1]])
    for p in pts:
        assert abs(lam @ p) < 1e-9 * np.linalg.norm(lam) * np.linalg.norm(p)


def test_isoptic_and_thaloid(elliptic_frame, rng):
    f = elliptic_frame
    p, q, r = (f.to_bary(rng.normal(size=3)) for _ in range(3))
    iso = cu.isoptic(f, p, q, r)
    assert iso.residual(r) < 1e-12
    th = cu.thaloid(f, p, q)
    lam = np.cross(r, rng.normal(size=3))
    for x in co.conic_line_intersections(th, lam):
        l1 = bary_join(x, p)
        l2 = bary_join(x, q)
        d = line_distance(f.line_from_bary(l1), f.line_from_bary(l2), f.pol)
        assert d.approx_eq(Measure(0, math.pi / 2), 1e-8)


def test_isogonic_equilateral(pol_elliptic):
    f = build_frame([1, 0.2, 0.0], [1, -0.1, 0.17320508075688773],
                    [1, -0.1, -0.17320508075688773], pol_elliptic)
    sols = cu.isogonic_points(f)
    assert sols
    assert any(proj_equal(np.abs(s), np.ones(3) / math.sqrt(3), 1e-6)
               or proj_equal(f.from_bary(s), f.from_bary(np.ones(3)), 1e-6)
               for s in sols)


def test_isogonic_random(disk_frame):
    sols = cu.isogonic_points(disk_frame)
    assert sols
    for s in sols:
        for i, j in ((0, 1), (1, 2), (2, 0)):
            li = bary_join(s, disk_frame.vertex_bary[i])
            lj = bary_join(s, disk_frame.vertex_bary[j])
            d = line_distance(disk_frame.line_from_bary(li),
                              disk_frame.line_from_bary(lj), disk_frame.pol)
            assert d.approx_eq(Measure(0, math.pi / 3), 1e-8)


def test_fermat_minimality(rng):
    f = random_disk_frame(rng, radius=0.6)
    interior = None
    for s in cu.isogonic_points(f):
        if np.all(s > 0) or np.all(s < 0):
            interior = np.abs(s)
            break
    if interior is None:
        pytest.skip("no interior isogonic point on this sample")
    base = cu.distance_sum(f, interior)
    for _ in range(30):
        d = rng.normal(size=3)
        probe = interior + 1e-3 * d / np.linalg.norm(d)
        if np.any(probe <= 0):
            continue
        assert cu.distance_sum(f, probe) >= base - 1e-10
