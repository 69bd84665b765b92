import math

import numpy as np
import pytest

from cktriangle.centers import (
    CENTERS,
    catalog_records,
    center,
    center_mates,
    evaluate,
    four_triangle,
    hofstadter_point,
    kiepert_conic,
    kiepert_point,
    kosnita_formula,
    orthoaxis,
    orthocorrespondent,
    orthotransversal,
    subframe,
    subframe_point,
)
from cktriangle.errors import GeometryError, UndefinedAtFrame
from cktriangle.frame import (
    bary_join,
    bary_meet,
    bary_perp_line,
    cevian_triple,
    isogonal,
    isotomic,
    pedal_triple,
    perspector,
    star,
    symmedian_point,
    tripolar,
)
from cktriangle.projective import cross_ratio, proj_equal
from tests.conftest import random_disk_frame, random_elliptic_frame


def test_centroid_always_unit(elliptic_frame):
    assert proj_equal(center("centroid", elliptic_frame), np.ones(3))


def test_hyp1_orthocenter_is_vertex(hyp1):
    assert proj_equal(center("orthocenter", hyp1), [1, 0, 0], 1e-9)


def test_e3r_orthocenter_undefined(e3r):
    with pytest.raises(UndefinedAtFrame):
        center("orthocenter", e3r)


def test_catalog_evaluates_everywhere(elliptic_frame, disk_frame):
    skipped = {"x100_point"}  # antisymmetric denominators may vanish
    for f in (elliptic_frame, disk_frame):
        for cid, entry in CENTERS.items():
            if cid in skipped:
                continue
            p = evaluate(entry, f)
            assert np.max(np.abs(p)) > 0


def test_orthoaxis_incidences(elliptic_frame):
    f = elliptic_frame
    ax = orthoaxis(f)
    for cid in ("de_longchamps", "pseudo_circumcenter", "double_point",
                "orthocenter", "orthostar", "pseudo_ninepoint", "x24_point"):
        p = center(cid, f)
        assert abs(ax @ p) < 1e-9 * np.linalg.norm(ax) * np.linalg.norm(p)


def test_orthoaxis_harmonic_ranges(disk_frame):
    f = disk_frame
    l = center("de_longchamps", f)
    op = center("pseudo_circumcenter", f)
    gp = center("double_point", f)
    h = center("orthocenter", f)
    hs = center("orthostar", f)
    npt = center("pseudo_ninepoint", f)
    assert abs(cross_ratio(l, h, op, hs) + 1) < 1e-9
    assert abs(cross_ratio(l, gp, op, h) + 1) < 1e-9
    assert abs(cross_ratio(h, op, npt, hs) + 1) < 1e-9


def test_absolute_centers_mates(elliptic_frame):
    for cid in ("orthocenter", "double_point", "de_longchamps"):
        quad = center_mates(CENTERS[cid], elliptic_frame)
        for m in quad[1:]:
            assert proj_equal(quad[0], m, 1e-9)


def test_incenter_excenter_quadruple(disk_frame):
    f = disk_frame
    quad = center_mates(CENTERS["incenter"], f)
    u = np.sqrt(np.abs(f.d6[:3]))
    assert proj_equal(quad[0], u, 1e-9)
    assert proj_equal(quad[1], [-u[0], u[1], u[2]], 1e-9)


def test_gergonne_nagel_isotomic_pair(disk_frame):
    f = disk_frame
    ge = center("gergonne", f)
    na = center("nagel", f)
    assert proj_equal(isotomic(f, ge), na, 1e-9)


def test_orthocorrespondent_examples(elliptic_frame, rng):
    f = elliptic_frame
    assert proj_equal(orthocorrespondent(f, center("orthocenter", f)),
                      center("double_point", f), 1e-9)
    assert proj_equal(orthocorrespondent(f, center("incenter", f)),
                      center("x57_point", f), 1e-8)
    p = f.to_bary(rng.normal(size=3))
    lam = orthotransversal(f, p)
    pts = []
    for v, side in zip(f.vertex_bary, f.sideline_bary):
        perp = bary_perp_line(f, bary_join(v, p), p)
        pts.append(bary_meet(perp, side))
    for q in pts:
        assert abs(lam @ q) < 1e-9 * np.linalg.norm(lam) * np.linalg.norm(q)


def test_four_triangle_instances(elliptic_frame):
    f = elliptic_frame
    got = four_triangle(CENTERS["de_longchamps"], CENTERS["de_longchamps"], f)
    assert got is not None
    assert proj_equal(got, center("orthocenter", f), 1e-8)
    kos = four_triangle(CENTERS["circumcenter"], CENTERS["circumcenter"], f)
    assert kos is not None
    assert proj_equal(kos, center("kosnita", f), 1e-8)
    assert min(np.max(np.abs(kosnita_formula(f, sg) - kos / np.max(np.abs(kos))))
               for sg in (1.0, -1.0)) < 1e-6 or any(
        proj_equal(kosnita_formula(f, sg), kos, 1e-7) for sg in (1.0, -1.0))
    dv = four_triangle(CENTERS["incenter"], CENTERS["incenter"], f)
    assert dv is not None
    assert proj_equal(dv, center("de_villiers", f), 1e-8)


def test_hofstadter_special_values(disk_frame):
    f = disk_frame
    assert proj_equal(hofstadter_point(f, 0.5), center("incenter", f), 1e-9)
    assert proj_equal(hofstadter_point(f, -1.0), center("orthocenter", f), 1e-9)
    assert proj_equal(hofstadter_point(f, 2.0),
                      center("pseudo_circumcenter", f), 1e-9)
    k = 0.3
    assert proj_equal(isogonal(f, hofstadter_point(f, k)),
                      hofstadter_point(f, 1 - k), 1e-8)


def test_kiepert_points_on_conic(disk_frame):
    f = disk_frame
    kc = kiepert_conic(f)
    for x in (0.5, 1.2):
        p = kiepert_point(f, x)
        assert kc.residual(p) < 1e-9


def test_bevan_and_mittenpunkt(elliptic_frame):
    f = elliptic_frame
    ik = [center("incenter", f, k) for k in range(4)]
    duals = [f.Dmat[i] for i in range(3)]
    got = perspector(ik[1:], duals)
    assert got is not None and proj_equal(got, center("bevan", f), 1e-9)
    mi = center("mittenpunkt", f)
    got = perspector(list(cevian_triple(f, np.ones(3))), ik[1:])
    assert got is not None and proj_equal(got, mi, 1e-9)
    lam = bary_join(center("incenter", f), symmedian_point(f))
    assert abs(lam @ mi) < 1e-9 * np.linalg.norm(lam) * np.linalg.norm(mi)


def test_schiffler_and_x65(disk_frame):
    f = disk_frame
    assert proj_equal(isogonal(f, center("schiffler", f)),
                      center("x65_point", f), 1e-9)


def test_catalog_export():
    records = catalog_records()
    assert len(records) >= 45
    ids = {r["id"] for r in records}
    assert "orthocenter" in ids and "kosnita" in ids
    with_limits = [r for r in records if r["etc_limit"]]
    assert len(with_limits) >= 40


def test_x389_perspector(elliptic_frame):
    f = elliptic_frame
    h = center("orthocenter", f)
    orthic = pedal_triple(f, h)
    e = f.vertex_bary
    hs = []
    for corner, (i, j) in zip(e, ((1, 2), (2, 0), (0, 1))):
        sub = subframe(f, corner, orthic[j], orthic[i])
        hs.append(subframe_point(f, sub, center("orthocenter", sub)))
    got = perspector(hs, orthic)
    assert got is not None and proj_equal(got, center("x389_point", f), 1e-8)


def test_star_of_centroids(elliptic_frame):
    f = elliptic_frame
    for k in range(4):
        g = center("centroid", f, k)
        assert proj_equal(star(f, g), center("circumcenter", f, k), 1e-10)
