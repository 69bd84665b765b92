"""The claim registry: every mechanically re-verified statement.

Each claim is a predicate over a sampled frame returning a residual;
the runner compares it against the claim tolerance.  THEOREM claims must
pass; CONJECTURE and OBSERVATION claims only report their pass rates.
Topics label the subject area with a coarse section tag used by the
coverage audit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .. import circles as ci
from .. import conics as co
from .. import cubics as cu
from ..centers import (
    CENTERS,
    center,
    center_mates,
    evaluate,
    four_triangle,
    hofstadter_point,
    kiepert_apices,
    kiepert_conic,
    kiepert_point,
    orthoaxis,
    orthocorrespondent,
    orthotransversal,
    subframe,
    subframe_point,
)
from ..errors import GeometryError
from ..frame import (
    CenterFunction,
    anticevian_triple,
    area,
    bary_distance,
    bary_join,
    bary_meet,
    bary_ped,
    bary_perp_line,
    cevian_triple,
    cosh_distance,
    dual_frame,
    isoconjugate,
    isogonal,
    isotomic,
    mates,
    pedal_triple,
    antipedal_triple,
    perspector,
    perspectivity_residual,
    realize,
    reflect,
    star,
    symmedian_point,
    tripolar,
    tripole,
)
from ..measure import Measure, distance, line_distance, segment_measures, semi_midpoints
from ..projective import cross_ratio, proj_equal

ALL_REGIMES = ("elliptic", "lobachevsky", "desitter", "antidesitter")
CURVED = ("elliptic", "lobachevsky")

csqrt = np.emath.sqrt


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    topic: str
    summary: str
    predicate: Callable
    regimes: tuple = ALL_REGIMES
    tol: float = 1e-8
    grade: str = "THEOREM"
    category: str = "identity"


REGISTRY: dict[str, ClaimRecord] = {}


def claim(cid: str, topic: str, summary: str, regimes=ALL_REGIMES, tol=1e-8,
          grade="THEOREM", category="identity"):
    def wrap(fn):
        REGISTRY[cid] = ClaimRecord(
            id=cid, topic=topic, summary=summary, predicate=fn,
            regimes=tuple(regimes), tol=tol, grade=grade, category=category)
        return fn
    return wrap


# -- small helpers -------------------------------------------------------------


def _norm(v):
    return np.asarray(v, dtype=float) / np.linalg.norm(v)


def _incidence(lam, p) -> float:
    return abs(float(np.asarray(lam) @ np.asarray(p))) / (
        np.linalg.norm(lam) * np.linalg.norm(p))


def _pt_gap(p, q) -> float:
    from ..projective import angular_distance

    return min(angular_distance(p, q), angular_distance(p, -np.asarray(q)))


def _collinearity(pts) -> float:
    m = np.stack([_norm(p) for p in pts])
    return abs(float(np.linalg.det(m)))


def _harmonic(p1, p2, p3, p4) -> float:
    """Residual of the consecutive-order harmonic condition."""
    return abs(cross_ratio(p1, p3, p2, p4) + 1.0)


def _perspector_gap(t1, t2, target) -> float:
    r = perspectivity_residual(list(t1), list(t2))
    p = perspector(list(t1), list(t2), tol=1e-6)
    if p is None:
        return 1.0
    return max(r, _pt_gap(p, target))


def _random_point(f, rng):
    return f.to_bary(rng.normal(size=3))


def _line_orth(f, k, l) -> float:
    return abs(f.dual_form(k, l)) / (np.linalg.norm(k) * np.linalg.norm(l)
                                     * np.linalg.norm(f.Dmat))


# ==== 2.1 orthocentric structures =============================================


@claim("altitudes-concur", "2.1.1", "vertex joins with the orthocenter are perpendicular to the sides")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    worst = 0.0
    for v, lam in zip(f.vertex_bary, f.sideline_bary):
        alt = bary_join(v, h)
        worst = max(worst, _line_orth(f, alt, lam))
    return worst


@claim("orthocentric-system", "2.1.1", "each of A, B, C, H is the orthocenter of the other three")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    pts = [f.vertex_bary[0], f.vertex_bary[1], f.vertex_bary[2], h]
    worst = 0.0
    for out in range(4):
        tri = [pts[i] for i in range(4) if i != out]
        lines = []
        for i in range(3):
            side = bary_join(tri[(i + 1) % 3], tri[(i + 2) % 3])
            lines.append(_norm(bary_perp_line(f, side, tri[i])))
        worst = max(worst, abs(np.linalg.det(np.stack(lines))))
        meetpt = bary_meet(lines[0], lines[1])
        worst = max(worst, _pt_gap(meetpt, pts[out]))
    return worst


@claim("dual-triple-orthocenter", "2.1.1", "the frame and its dual triple are perspective at the orthocenter")
def _c(f, rng, tol):
    duals = [f.Dmat[i] for i in range(3)]
    return _perspector_gap(f.vertex_bary, duals, center("orthocenter", f))


def _vigara_triple(f):
    c6 = f.c6
    ab = np.array([c6[4], 0.0, -c6[0]])
    ba = np.array([0.0, c6[3], -c6[1]])
    ac = np.array([c6[5], -c6[0], 0.0])
    ca = np.array([0.0, -c6[2], c6[3]])
    bc = np.array([-c6[1], c6[5], 0.0])
    cb = np.array([-c6[2], 0.0, c6[4]])
    a_t = bary_meet(bary_join(ab, ba), bary_join(ac, ca))
    b_t = bary_meet(bary_join(bc, cb), bary_join(ba, ab))
    c_t = bary_meet(bary_join(ca, ac), bary_join(cb, bc))
    return (a_t, b_t, c_t), (ab, ba, ac, ca, bc, cb)


@claim("vigara-triple-perspective", "2.1.2", "the sideline-meet triple is perspective to the frame and its dual at the orthocenter")
def _c(f, rng, tol):
    (a_t, b_t, c_t), _ = _vigara_triple(f)
    h = center("orthocenter", f)
    duals = [f.Dmat[i] for i in range(3)]
    return max(_perspector_gap((a_t, b_t, c_t), f.vertex_bary, h),
               _perspector_gap((a_t, b_t, c_t), duals, h))


@claim("vigara-six-conic", "2.1.2", "the six dual-sideline meets lie on one conic")
def _c(f, rng, tol):
    _, six = _vigara_triple(f)
    fit = co.conic_through(six)
    return max(fit.residual(p) for p in six)


@claim("vigara-collinear-meets", "2.1.2", "the dual-triple side meets with the sides are collinear on the stated line")
def _c(f, rng, tol):
    (a_t, b_t, c_t), _ = _vigara_triple(f)
    c6 = f.c6
    lam = np.array([c6[0] * c6[3], c6[1] * c6[4], c6[2] * c6[5]])
    pts = [
        bary_meet(bary_join(b_t, c_t), f.sideline_bary[0]),
        bary_meet(bary_join(c_t, a_t), f.sideline_bary[1]),
        bary_meet(bary_join(a_t, b_t), f.sideline_bary[2]),
    ]
    return max(max(_incidence(lam, p) for p in pts), _collinearity(pts))


@claim("vigara-dual-perspector", "2.1.2", "the dual of the meet triple is perspective to the frame at the pseudo-circumcenter")
def _c(f, rng, tol):
    (a_t, b_t, c_t), _ = _vigara_triple(f)
    duals = []
    for tri_pt in ((b_t, c_t), (c_t, a_t), (a_t, b_t)):
        lam = bary_join(*tri_pt)
        duals.append(f.bary_dual_line(lam))
    return _perspector_gap(duals, f.vertex_bary, center("pseudo_circumcenter", f))


@claim("double-triangle-anticevian", "2.1.3", "the antipedal triple of the orthocenter is the anticevian triple of the double point")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    gp = center("double_point", f)
    anti = antipedal_triple(f, h)
    ac = anticevian_triple(f, gp)
    return max(_pt_gap(a, b) for a, b in zip(anti, ac))


@claim("double-triangle-midpoints", "2.1.3", "the vertices are proper midpoints of the double-triangle vertex pairs")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    anti = antipedal_triple(f, h)
    worst = 0.0
    for i, (j, k) in enumerate(((1, 2), (2, 0), (0, 1))):
        d1 = bary_distance(f, f.vertex_bary[i], anti[j])
        d2 = bary_distance(f, f.vertex_bary[i], anti[k])
        if not d1.approx_eq(d2, 1e-7):
            worst = max(worst, abs(d1.re - d2.re) + abs(d1.im - d2.im))
    return worst


@claim("double-circle-perspectors", "2.1.3", "the circle through the double triangle has center H and the stated perspectors")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    anti = antipedal_triple(f, h)
    circ = co.circle_about(f, h, anti[0])
    r1 = max(circ.residual(anti[1]), circ.residual(anti[2]))
    per = co.conic_perspector(circ)
    r2 = _pt_gap(per, h)
    sub = subframe(f, *anti)
    m = f.to_bary(sub.from_bary(co.conic_perspector(
        co.Conic(_conic_in(sub, f, circ)))))
    x = f.d6
    tgt = realize(np.array([x[3] * f.c6[3] ** 2, x[4] * f.c6[4] ** 2,
                            x[5] * f.c6[5] ** 2], dtype=complex))
    return max(r1, r2, _pt_gap(m, tgt))


def _conic_in(sub, f, conic):
    """Matrix of a conic re-expressed in a subframe's coordinates."""
    t = np.stack([sub.from_bary(np.eye(3)[i]) for i in range(3)], axis=1)
    v = f.Vinv @ t
    return v.T @ conic.M @ v


@claim("double-L-perspective", "2.1.3", "the double triangle is perspective to the dual triple at the de Longchamps point")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    anti = antipedal_triple(f, h)
    duals = [f.Dmat[i] for i in range(3)]
    return _perspector_gap(anti, duals, center("de_longchamps", f))


@claim("orthic-incenter", "2.1.4", "the orthocenter is among the in/excenter quadruple of the orthic triangle",
       regimes=("elliptic", "lobachevsky", "antidesitter"))
def _c(f, rng, tol):
    h = center("orthocenter", f)
    orthic = pedal_triple(f, h)
    sub = subframe(f, *orthic)
    try:
        targets = [f.to_bary(sub.from_bary(center("incenter", sub, k)))
                   for k in range(4)]
    except GeometryError:
        return None
    gaps_h = min(_pt_gap(h, t) for t in targets)
    worst = gaps_h
    for v in f.vertex_bary:
        worst = max(worst, min(_pt_gap(v, t) for t in targets))
    return worst


@claim("orthic-x52-traces", "2.1.4", "the pedals of H on the orthic sides are the orthic traces of the X52-limit point")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    orthic = pedal_triple(f, h)
    sub = subframe(f, *orthic)
    h_in = sub.to_bary(f.from_bary(h))
    x52_in = sub.to_bary(f.from_bary(center("x52_point", f)))
    peds = pedal_triple(sub, h_in)
    cevs = cevian_triple(sub, x52_in)
    return max(_pt_gap(a, b) for a, b in zip(peds, cevs))


@claim("antipedal-opc-isogonal", "2.1.5", "the antipedal triple of the pseudo-circumcenter is perspective to the frame at the isogonal double point")
def _c(f, rng, tol):
    op = center("pseudo_circumcenter", f)
    anti = antipedal_triple(f, op)
    return _perspector_gap(anti, f.vertex_bary, isogonal(f, center("double_point", f)))


@claim("antipedal-opc-orthic", "2.1.5", "the antipedal triple of the pseudo-circumcenter is perspective to the orthic triple")
def _c(f, rng, tol):
    op = center("pseudo_circumcenter", f)
    anti = antipedal_triple(f, op)
    orthic = pedal_triple(f, center("orthocenter", f))
    return _perspector_gap(anti, orthic, center("antipedal_orthic_perspector", f))


@claim("star-dual-tripolar", "2.1.6", "the star map is the dual of the tripolar")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    return _pt_gap(star(f, p), f.bary_dual_line(tripolar(f, p)))


@claim("star-centroid-circumcenter", "2.1.6", "stars of the four centroids are the four circumcenters")
def _c(f, rng, tol):
    worst = 0.0
    for k in range(4):
        g = center("centroid", f, k)
        worst = max(worst, _pt_gap(star(f, g), center("circumcenter", f, k)))
    return worst


@claim("orthaxis-incidences", "2.1.7", "the seven orthoaxis centers are incident with the orthoaxis",
       category="orthoaxis")
def _c(f, rng, tol):
    ax = orthoaxis(f)
    worst = 0.0
    for cid in ("de_longchamps", "pseudo_circumcenter", "double_point",
                "orthocenter", "orthostar", "pseudo_ninepoint", "x24_point"):
        worst = max(worst, _incidence(ax, center(cid, f)))
    return worst


@claim("orthaxis-harmonic-LOHH", "2.1.7", "L, O+, H, H* form a harmonic range",
       category="orthoaxis")
def _c(f, rng, tol):
    return _harmonic(center("de_longchamps", f), center("pseudo_circumcenter", f),
                     center("orthocenter", f), center("orthostar", f))


@claim("orthaxis-harmonic-LOGH", "2.1.7", "L, O+, G+, H form a harmonic range",
       category="orthoaxis")
def _c(f, rng, tol):
    return _harmonic(center("de_longchamps", f), center("pseudo_circumcenter", f),
                     center("double_point", f), center("orthocenter", f))


@claim("orthaxis-harmonic-HNOH", "2.1.7", "H, N+, O+, H* form a harmonic range",
       category="orthoaxis")
def _c(f, rng, tol):
    return _harmonic(center("orthocenter", f), center("pseudo_ninepoint", f),
                     center("pseudo_circumcenter", f), center("orthostar", f))


@claim("orthaxis-meet-nplus", "2.1.7", "the orthoaxes of the orthocentric triangulation meet at the X5-limit point")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    nplus = center("pseudo_ninepoint", f)
    e = f.vertex_bary
    worst = _incidence(orthoaxis(f), nplus)
    for tri in ((e[0], h, e[1]), (e[1], h, e[2]), (e[2], h, e[0])):
        sub = subframe(f, *tri)
        ax = orthoaxis(sub)
        ax_main = f.line_to_bary(sub.line_from_bary(ax))
        worst = max(worst, _incidence(ax_main, nplus))
    return worst


@claim("orthaxis-of-dual", "2.1.7", "the de Longchamps point, double point, pseudo-circumcenter and orthostar of the dual are O+, H*, L, G+")
def _c(f, rng, tol):
    fd = dual_frame(f)

    def tomain(p):
        return f.to_bary(fd.from_bary(p))

    pairs = (
        ("de_longchamps", "pseudo_circumcenter"),
        ("double_point", "orthostar"),
        ("pseudo_circumcenter", "de_longchamps"),
        ("orthostar", "double_point"),
    )
    worst = 0.0
    for dual_id, main_id in pairs:
        worst = max(worst, _pt_gap(tomain(center(dual_id, fd)), center(main_id, f)))
    return worst


@claim("bicevian-orthaxis-symmetry", "2.1.7", "the orthoaxis pole of the H, G+ bicevian conic is the dual point of the orthoaxis")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    gp = center("double_point", f)
    conic = co.bicevian_conic(f, h, gp)
    ax = orthoaxis(f)
    pole = conic.pole(ax)
    return _pt_gap(pole, f.bary_dual_line(ax))


@claim("bicevian-semi-midpoint-polarity", "2.1.7", "the semi-midpoints of H and O+ are conjugate in the bicevian conic",
       regimes=CURVED)
def _c(f, rng, tol):
    h = center("orthocenter", f)
    gp = center("double_point", f)
    op = center("pseudo_circumcenter", f)
    conic = co.bicevian_conic(f, h, gp)
    plus, minus, _ = semi_midpoints(f.from_bary(h), f.from_bary(op), f.pol)
    u = f.to_bary(plus)
    v = f.to_bary(minus)
    val = abs(float(u @ conic.M @ v))
    return val / (np.linalg.norm(u) * np.linalg.norm(v))


@claim("taylor-six-conic", "2.1.8", "the six projected orthic pedals are conconic")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    orthic = pedal_triple(f, h)
    pts = []
    for i, foot in enumerate(orthic):
        others = [j for j in range(3) if j != i]
        trip = pedal_triple(f, foot)
        for j in others:
            pts.append(trip[j])
    fit = co.conic_through(pts)
    return max(fit.residual(p) for p in pts)


@claim("taylor-perspector-x389", "2.1.8", "the corner orthocenters are perspective to the orthic triple at the X389-limit point")
def _c(f, rng, tol):
    h = center("orthocenter", f)
    orthic = pedal_triple(f, h)
    e = f.vertex_bary
    hs = []
    for corner, (i, j) in zip(e, ((1, 2), (2, 0), (0, 1))):
        sub = subframe(f, corner, orthic[j], orthic[i])
        hs.append(subframe_point(f, sub, center("orthocenter", sub)))
    return _perspector_gap(hs, orthic, center("x389_point", f))


@claim("orthotransversal-line", "2.1.9", "the three perpendicular side meets are collinear on the stated line")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    lam = orthotransversal(f, p)
    worst = 0.0
    for v, side in zip(f.vertex_bary, f.sideline_bary):
        perp = bary_perp_line(f, bary_join(v, p), p)
        meet = bary_meet(perp, side)
        worst = max(worst, _incidence(lam, meet))
    return worst


@claim("orthocorrespondent-H", "2.1.9", "the orthocorrespondent of the orthocenter is the double point")
def _c(f, rng, tol):
    return _pt_gap(orthocorrespondent(f, center("orthocenter", f)),
                   center("double_point", f))


@claim("orthotransversal-dual-meets", "2.1.9", "the perpendicular meets with the dual sides lie on the dual line of the point")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    pd = f.bary_dual_point(p)
    worst = 0.0
    for v, i in zip(f.vertex_bary, range(3)):
        perp = bary_perp_line(f, bary_join(v, p), p)
        dual_side = bary_join(f.Dmat[(i + 1) % 3], f.Dmat[(i + 2) % 3])
        meet = bary_meet(perp, dual_side)
        worst = max(worst, _incidence(pd, meet))
    return worst


@claim("orthotransversal-dualized", "2.1.9", "the dualized perpendicular joins concur, sending the double point to the orthocenter")
def _c(f, rng, tol):
    from ..frame import bary_perp_point

    gp = center("double_point", f)
    tau = tripolar(f, gp)
    lines = []
    for v, side in zip(f.vertex_bary, f.sideline_bary):
        q = bary_meet(side, tau)
        w = bary_perp_point(f, q, tau)
        lines.append(_norm(bary_join(w, v)))
    det = abs(float(np.linalg.det(np.stack(lines))))
    meet = bary_meet(lines[0], lines[1])
    return max(det, _pt_gap(meet, center("orthocenter", f)))


@claim("par-meets-on-dual", "2.1.9", "the parallel side meets lie on the dual line of the point")
def _c(f, rng, tol):
    from ..frame import bary_par

    p = _random_point(f, rng)
    pd = f.bary_dual_point(p)
    worst = 0.0
    for side in f.sideline_bary:
        lam = bary_par(f, side, p)
        worst = max(worst, _incidence(pd, bary_meet(lam, side)))
    return worst


# ==== 2.2 center functions ====================================================


@claim("absolute-centers-mates", "2.2", "absolute centers coincide with their three mates")
def _c(f, rng, tol):
    worst = 0.0
    for cid in ("orthocenter", "double_point", "pseudo_circumcenter",
                "de_longchamps", "orthostar", "pseudo_ninepoint", "x24_point"):
        base = center(cid, f)
        for k in range(1, 4):
            worst = max(worst, _pt_gap(base, center(cid, f, k)))
    return worst


@claim("mates-incenter-family", "2.2", "the incenter mates are the excenters (equidistant from all sidelines)")
def _c(f, rng, tol):
    worst = 0.0
    for k in range(4):
        ik = center("incenter", f, k)
        vals = []
        for side in f.sideline_bary:
            foot = bary_ped(f, ik, side)
            vals.append(abs(cosh_distance(f, ik, foot)))
        worst = max(worst, (max(vals) - min(vals)) / max(1.0, max(vals)))
    return worst


# ==== 2.3 circumcircles and incircles =========================================


@claim("circumcircle-vertices", "2.3.1", "the circle about the circumcenter through one vertex passes through the others",
       category="circles")
def _c(f, rng, tol):
    circ = ci.circumcircle(f)
    return max(circ.conic.residual(f.vertex_bary[1]),
               circ.conic.residual(f.vertex_bary[2]))


@claim("circumdistance-forms", "2.3.1", "the stated closed forms give the circumcenter distances",
       category="circles")
def _c(f, rng, tol):
    x = f.d6
    c11 = f.c6[0]
    worst = 0.0
    for k, sgn in ((0, 1.0), (1, -1.0)):
        o = center("circumcenter", f, k)
        cd = cosh_distance(f, o, f.vertex_bary[0]) ** 2
        s = x[0] + x[1] + x[2] + 2 * (x[3] + sgn * x[4] + sgn * x[5])
        expect = 1.0 / (c11 * s)
        worst = max(worst, abs(cd - expect) / max(1.0, abs(expect)))
    return worst


@claim("incircle-tangency", "2.3.1", "the inconic over the Gergonne point touches the three sidelines with center the incenter",
       category="circles")
def _c(f, rng, tol):
    circ = ci.incircle(f)
    worst = max(co.line_tangency_residual(circ.conic, lam) for lam in f.sideline_bary)
    return max(worst, _pt_gap(circ.center, center("incenter", f)))


@claim("indistance-form", "2.3.1", "the stated closed form gives the squared cosh distance to the dual vertex",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    x = f.d6
    y = f.c6
    i0 = center("incenter", f)
    cd = cosh_distance(f, i0, f.Dmat[0]) ** 2
    u = np.sqrt(np.abs(x[:3]))
    num = math.copysign(1.0, x[0])
    den = (y[0] * abs(x[0]) + y[1] * abs(x[1]) + y[2] * abs(x[2])
           + 2 * (y[3] * u[1] * u[2] + y[4] * u[2] * u[0] + y[5] * u[0] * u[1]))
    expect = num / den
    return abs(cd - expect) / max(1.0, abs(expect))


@claim("o-triple-perspectives", "2.3.1", "the circumcenter mates are perspective to the dual triple at O and to the frame at its isogonal")
def _c(f, rng, tol):
    ok = [center("circumcenter", f, k) for k in range(4)]
    duals = [f.Dmat[i] for i in range(3)]
    r1 = _perspector_gap(ok[1:], duals, ok[0])
    r2 = _perspector_gap(ok[1:], f.vertex_bary, isogonal(f, ok[0]))
    return max(r1, r2)


@claim("i-triple-perspective", "2.3.1", "the excenters are perspective to the frame at the incenter")
def _c(f, rng, tol):
    ik = [center("incenter", f, k) for k in range(4)]
    return _perspector_gap(ik[1:], f.vertex_bary, ik[0])


@claim("oi-orthocentric", "2.3.1", "the circumcenter and incenter quadruples are orthocentric systems")
def _c(f, rng, tol):
    worst = 0.0
    for cid in ("circumcenter", "incenter"):
        pts = [center(cid, f, k) for k in range(4)]
        for (i, j), (k, l) in ((((0, 1), (2, 3))), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
            l1 = bary_join(pts[i], pts[j])
            l2 = bary_join(pts[k], pts[l])
            worst = max(worst, _line_orth(f, l1, l2))
    return worst


@claim("lemoine-family-perspectives", "2.3.1", "the circle perspector mates are perspective at each other's base points and their joins concur at the double point")
def _c(f, rng, tol):
    kt = [center("lemoine", f, k) for k in range(4)]
    gt = [center("lemoine_conjugate", f, k) for k in range(4)]
    r1 = _perspector_gap(kt[1:], f.vertex_bary, gt[0])
    r2 = _perspector_gap(gt[1:], f.vertex_bary, kt[0])
    gplus = center("double_point", f)
    r3 = max(_incidence(bary_join(kt[j], gt[j]), gplus) for j in range(4))
    g = np.ones(3)
    r4 = _incidence(bary_join(kt[0], gt[0]), g)
    return max(r1, r2, r3, r4)


@claim("lemoine-isogonal-pair", "2.3.1", "the circle perspector and its isogonal conjugate swap under isogonal conjugation")
def _c(f, rng, tol):
    kt = evaluate(CENTERS["lemoine"], f)
    gt = evaluate(CENTERS["lemoine_conjugate"], f)
    return max(_pt_gap(isogonal(f, kt), gt), _pt_gap(isogonal(f, gt), kt))


@claim("lemoine-harmonic-construction", "2.3.1", "the harmonic-conjugate joins concur at the circle perspector")
def _c(f, rng, tol):
    from ..projective import harmonic_conjugate

    kt = evaluate(CENTERS["lemoine"], f)
    h = center("orthocenter", f)
    lines = []
    for i in range(3):
        v = f.vertex_bary[i]
        ag = cevian_triple(f, np.ones(3))[i]
        ah = cevian_triple(f, h)[i]
        aprime = f.Dmat[i]
        hc = harmonic_conjugate(f.from_bary(v), f.from_bary(ah), f.from_bary(aprime))
        lines.append(_norm(bary_join(ag, f.to_bary(hc))))
    det = abs(float(np.linalg.det(np.stack(lines))))
    return max(det, _pt_gap(bary_meet(lines[0], lines[1]), kt))


@claim("twin-circle-relation", "2.3.1", "the twin circle satisfies cosh^2 r' = -cosh^2 r",
       regimes=("lobachevsky",), category="circles")
def _c(f, rng, tol):
    from ..frame import bary_cosh2_distance

    # A proper interior circle has an exterior twin with real points.
    m = center("incenter", f)
    p = np.ones(3)
    h2 = bary_cosh2_distance(f, m, p)
    try:
        circ = co.circle_with_cosh2_radius(f, m, h2)
        tw = co.twin_circle(circ, f, m)
    except GeometryError:
        return None
    q = None
    for _ in range(12):
        lam = np.cross(m, rng.normal(size=3))
        pts = co.conic_line_intersections(tw, lam)
        for cand in pts:
            if abs(f.bary_form(cand, cand)) > 1e-8 * float(cand @ cand) * np.linalg.norm(f.Cmat):
                q = cand
                break
        if q is not None:
            break
    if q is None:
        return None
    t2 = bary_cosh2_distance(f, m, q)
    return abs(h2 + t2) / max(1.0, abs(h2))


@claim("fourth-intersections-Q0j", "2.3.1", "the fourth meets of the circumcircle with its mates are perspective at the centroid",
       category="circles", grade="OBSERVATION")
def _c(f, rng, tol):
    c0 = ci.circumcircle(f, 0)
    e = f.vertex_bary
    pts = []
    for j in (1, 2, 3):
        cj = ci.circumcircle(f, j)
        q = co.fourth_intersection(c0.conic, cj.conic, list(e), tol=1e-4)
        if q is None:
            return None
        pts.append(q)
    return _perspector_gap(pts, e, np.ones(3))


@claim("circumcircle-tangent-collinear", "2.3.1", "the vertex is collinear with the stated circle tangent meets",
       category="circles")
def _c(f, rng, tol):
    c1 = ci.circumcircle(f, 1)
    c2 = ci.circumcircle(f, 2)
    c3 = ci.circumcircle(f, 3)
    e = f.vertex_bary
    t_b2 = c2.conic.tangent_at(e[1])
    t_c3 = c3.conic.tangent_at(e[2])
    t_b1 = c1.conic.tangent_at(e[1])
    t_c1 = c1.conic.tangent_at(e[2])
    p1 = bary_meet(t_b2, t_c3)
    p2 = bary_meet(t_b1, t_c1)
    return _collinearity((e[0], p1, p2))


# ==== 2.3.3 further centers ===================================================


@claim("bevan-perspective", "2.3.3", "the excenters are perspective to the dual triple at the Bevan point",
       category="perspectivity")
def _c(f, rng, tol):
    ik = [center("incenter", f, k) for k in range(1, 4)]
    duals = [f.Dmat[i] for i in range(3)]
    return _perspector_gap(ik, duals, center("bevan", f))


@claim("bevan-lines-opc", "2.3.3", "the incenter-Bevan joins of the four triangles concur at the pseudo-circumcenter")
def _c(f, rng, tol):
    op = center("pseudo_circumcenter", f)
    worst = 0.0
    for k in range(4):
        lam = bary_join(center("incenter", f, k), center("bevan", f, k))
        worst = max(worst, _incidence(lam, op))
    return worst


@claim("oi-joins-x40-second", "2.3.3", "the four circumcenter-incenter joins concur at the second X40-limit point")
def _c(f, rng, tol):
    tgt = center("x40_second", f)
    worst = 0.0
    for k in range(4):
        lam = bary_join(center("circumcenter", f, k), center("incenter", f, k))
        worst = max(worst, _incidence(lam, tgt))
    return worst


@claim("mittenpunkt-perspective", "2.3.3", "the medial triple and the excenters are perspective at the Mittenpunkt",
       category="perspectivity")
def _c(f, rng, tol):
    mi = center("mittenpunkt", f)
    cev = cevian_triple(f, np.ones(3))
    ik = [center("incenter", f, k) for k in range(1, 4)]
    r1 = _perspector_gap(cev, ik, mi)
    ped = pedal_triple(f, center("circumcenter", f))
    r2 = max(_pt_gap(a, b) for a, b in zip(ped, cev))
    lam = bary_join(center("incenter", f), symmedian_point(f))
    return max(r1, r2, _incidence(lam, mi))


@claim("mitten-harmonic-x100", "2.3.3", "the paired incenter-Mittenpunkt meets are harmonic and perspective at the X100-limit point",
       category="perspectivity")
def _c(f, rng, tol):
    ik = [center("incenter", f, k) for k in range(4)]
    mk = [center("mittenpunkt", f, k) for k in range(4)]
    worst = 0.0
    ppts = []
    pairs = (((0, 1), (2, 3)), ((0, 2), (3, 1)), ((0, 3), (1, 2)))
    e = f.vertex_bary
    for idx, ((a1, a2), (b1, b2)) in enumerate(pairs):
        p = bary_meet(bary_join(ik[a1], mk[a1]), bary_join(ik[a2], mk[a2]))
        q = bary_meet(bary_join(ik[b1], mk[b1]), bary_join(ik[b2], mk[b2]))
        j, k = [(1, 2), (2, 0), (0, 1)][idx]
        worst = max(worst, _harmonic(e[j], p, e[k], q))
        ppts.append(q)
    return max(worst, _perspector_gap(ppts, e, center("x100_point", f)))


@claim("spieker-radical-center", "2.3.3", "the pseudo-Spieker center has equal modified powers for the three excircles",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    sp = center("spieker", f)
    exc = ci.excircles(f)[1:]
    vals = [ci.power(f, sp, e).p_tilde for e in exc]
    m = np.mean(vals)
    return max(abs(v - m) for v in vals) / max(1.0, abs(m))


@claim("spieker-pedal-perspective", "2.3.3", "the circumcenter pedal triple and the dual incenter pedal triple are perspective at the pseudo-Spieker center",
       category="perspectivity")
def _c(f, rng, tol):
    sp = center("spieker", f)
    ped_o = pedal_triple(f, center("circumcenter", f))
    fd = dual_frame(f)
    i_in_dual = fd.to_bary(f.from_bary(center("incenter", f)))
    ped_i = [f.to_bary(fd.from_bary(q)) for q in pedal_triple(fd, i_in_dual)]
    return _perspector_gap(ped_o, ped_i, sp)


@claim("hminus-mi-be-sp-collinear", "2.3.3", "the isogonal circumcenter, Mittenpunkt, Bevan and Spieker points are collinear")
def _c(f, rng, tol):
    pts = [center("circumcenter_isogonal", f), center("mittenpunkt", f),
           center("bevan", f), center("spieker", f)]
    lam = bary_join(pts[0], pts[1])
    return max(_incidence(lam, pts[2]), _incidence(lam, pts[3]))


@claim("schiffler-perspective", "2.3.3", "the excenter-pseudo-circumcenter side meets are perspective at the pseudo-Schiffler point",
       category="perspectivity")
def _c(f, rng, tol):
    op = center("pseudo_circumcenter", f)
    pts = []
    for k, side in zip((1, 2, 3), f.sideline_bary):
        pts.append(bary_meet(bary_join(center("incenter", f, k), op), side))
    return _perspector_gap(pts, f.vertex_bary, center("schiffler", f))


@claim("antipedal-O-perspectives", "2.3.3", "the antipedal triple of the circumcenter is perspective to the mates and the dual triple at the circumcenter",
       category="perspectivity")
def _c(f, rng, tol):
    o = center("circumcenter", f)
    anti = antipedal_triple(f, o)
    ok = [center("circumcenter", f, k) for k in range(1, 4)]
    duals = [f.Dmat[i] for i in range(3)]
    return max(_perspector_gap(anti, ok, o), _perspector_gap(anti, duals, o))


@claim("x100-second-meets", "2.3.3", "the circumcenter-antipedal and excenter joins meet at the cevian traces of the second X100-limit point",
       category="perspectivity")
def _c(f, rng, tol):
    o = center("circumcenter", f)
    anti = antipedal_triple(f, o)
    ik = [center("incenter", f, k) for k in range(4)]
    p = center("x100_second", f)
    tr = cevian_triple(f, p)
    pa = bary_meet(bary_join(anti[1], ik[2]), bary_join(anti[2], ik[3]))
    pb = bary_meet(bary_join(anti[2], ik[3]), bary_join(anti[0], ik[1]))
    pc = bary_meet(bary_join(anti[0], ik[1]), bary_join(anti[1], ik[3]))
    worst = max(_pt_gap(pa, tr[0]), _pt_gap(pb, tr[1]))
    circ = ci.circumcircle(f)
    return max(worst, circ.conic.residual(p))


@claim("x57-constructions", "2.3.3", "the incenter pedal triple meets the excenters at the orthocorrespondent of the incenter",
       category="perspectivity")
def _c(f, rng, tol):
    i0 = center("incenter", f)
    x57 = center("x57_point", f)
    ik = [center("incenter", f, k) for k in range(1, 4)]
    r1 = _perspector_gap(pedal_triple(f, i0), ik, x57)
    r2 = _pt_gap(orthocorrespondent(f, i0), x57)
    return max(r1, r2)


@claim("x99-tripole", "2.3.3", "the tripole of the perspector join lies on the circumcircle",
       category="circles")
def _c(f, rng, tol):
    p = center("x99_point", f)
    return ci.circumcircle(f).conic.residual(p)


@claim("kosnita-four-triangle", "2.3.3", "the circumcenter triangulation perspector matches the closed form for one root branch",
       category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    from ..centers import kosnita_formula

    got = center("kosnita", f)
    return min(_pt_gap(got, kosnita_formula(f, sg)) for sg in (1.0, -1.0))


@claim("corner-circumcenter-perspectives", "2.3.3", "the circumcenter-join meets are perspective to the frame at O and to the dual triple",
       category="perspectivity")
def _c(f, rng, tol):
    ok = [center("circumcenter", f, k) for k in range(4)]
    e = f.vertex_bary
    p1 = bary_meet(bary_join(ok[2], e[2]), bary_join(ok[3], e[1]))
    p2 = bary_meet(bary_join(ok[3], e[0]), bary_join(ok[1], e[2]))
    p3 = bary_meet(bary_join(ok[1], e[1]), bary_join(ok[2], e[0]))
    duals = [f.Dmat[i] for i in range(3)]
    r1 = _perspector_gap((p1, p2, p3), e, ok[0])
    r2 = perspectivity_residual([p1, p2, p3], duals)
    return max(r1, r2)


@claim("de-villiers", "2.3.3", "the incenter triangulation is perspective at the de Villiers formula point",
       category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    tgt = center("de_villiers", f)
    got = four_triangle(CENTERS["incenter"], CENTERS["incenter"], f)
    if got is None:
        return 1.0
    return _pt_gap(got, tgt)


@claim("four-triangle-L", "2.3.4", "the de Longchamps triangulation perspector is the orthocenter",
       regimes=CURVED)
def _c(f, rng, tol):
    got = four_triangle(CENTERS["de_longchamps"], CENTERS["de_longchamps"], f)
    if got is None:
        return 1.0
    return _pt_gap(got, center("orthocenter", f))


@claim("four-triangle-defined", "2.3.4", "the triangulation operator is well-defined for the absolute centers",
       grade="CONJECTURE", regimes=CURVED)
def _c(f, rng, tol):
    from ..errors import DegenerateTriple

    worst = 0.0
    for cid in ("orthocenter", "double_point", "pseudo_circumcenter",
                "pseudo_ninepoint", "orthostar", "lemoine", "lemoine_conjugate"):
        try:
            got = four_triangle(CENTERS[cid], CENTERS[cid], f, tol=1e-7)
        except DegenerateTriple:
            continue  # identical triples: trivially perspective
        except GeometryError:
            return None
        if got is None:
            worst = 1.0
    return worst


@claim("four-triangle-undefined", "2.3.4", "the triangulation operator fails for the Gergonne and Nagel points",
       grade="CONJECTURE", regimes=CURVED)
def _c(f, rng, tol):
    for cid in ("gergonne", "nagel"):
        try:
            got = four_triangle(CENTERS[cid], CENTERS[cid], f, tol=1e-7)
        except GeometryError:
            continue  # failing to evaluate counts as not well-defined
        if got is not None:
            return 1.0
    return 0.0


# ==== 2.4 circle theory =======================================================


@claim("inscribed-angle", "2.4.1", "the inscribed angle identities hold",
       category="circles")
def _c(f, rng, tol):
    from ..measure import angle_measure

    o = center("circumcenter", f)
    al = f.angles[0].as_complex()
    a_, b_, c_ = (m.as_complex() for m in f.sides)
    x = f.d6
    lam = 1.0 / math.sqrt(abs(x[0] + x[1] + x[2] + 2 * (x[3] + x[4] + x[5])))
    from ..measure import angle_measures

    vB, vS, vR = (f.from_bary(f.vertex_bary[1]), f.from_bary(o),
                  f.from_bary(f.vertex_bary[2]))
    mus = [m.as_complex() for m in angle_measures(vB, vS, vR, f.pol)]
    lhs = np.sinh(al)
    # An exterior circumcenter shifts the central angle by a unit factor,
    # so the first identity is compared in modulus.
    r1 = min(
        abs(abs(lhs) - abs(rhs))
        for rhs in (lam / (np.cosh(b_ / 2) * np.cosh(c_ / 2)) * np.sinh(mu / 2)
                    for mu in mus)
    ) / max(1.0, abs(lhs))
    sub = subframe(f, f.vertex_bary[1], o, f.vertex_bary[2])
    ar = area(sub, 0)
    lhs2 = np.sinh(al - 0.5 * area(f, 0))
    r2 = min(
        min(abs(lhs2 - rhs2), abs(lhs2 + rhs2))
        for rhs2 in (np.sinh(0.5 * (mu - ar)) for mu in mus)
    ) / max(1.0, abs(lhs2))
    return max(r1, r2)


@claim("tangent-secant", "2.4.2", "the circumcircle tangent meets the sideline at the stated point with the stated relation",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    y = f.c6
    p = realize(np.array([0.0, y[0] - y[4], y[5] - y[0]], dtype=complex))
    circ = ci.circumcircle(f)
    tangent = circ.conic.tangent_at(f.vertex_bary[0])
    r1 = _pt_gap(p, bary_meet(tangent, f.sideline_bary[0]))
    from ..projective import harmonic_conjugate

    kt = evaluate(CENTERS["lemoine"], f)
    akt = cevian_triple(f, kt)[0]
    hc = harmonic_conjugate(f.from_bary(f.vertex_bary[1]),
                            f.from_bary(f.vertex_bary[2]), f.from_bary(akt))
    r2 = _pt_gap(p, f.to_bary(hc))
    mu_pa = segment_measures(f.from_bary(p), f.from_bary(f.vertex_bary[0]), f.pol)[0]
    mu_pb = segment_measures(f.from_bary(p), f.from_bary(f.vertex_bary[1]), f.pol)[0]
    mu_pc = segment_measures(f.from_bary(p), f.from_bary(f.vertex_bary[2]), f.pol)[0]
    a_ = f.sides[0].as_complex()
    lhs = np.sinh(mu_pa.as_complex()) ** 2 * np.cosh(a_ / 2) ** 2
    rhs = np.sinh(mu_pb.as_complex()) * np.sinh(mu_pc.as_complex())
    return max(r1, r2, min(abs(lhs - rhs), abs(lhs + rhs)) / max(1.0, abs(lhs)))


@claim("power-invariance", "2.4.4", "secant chord products are invariant and match the power up to branch choices",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    f = _power_friendly_frame(f, rng)
    circ = ci.circumcircle(f)
    p = np.abs(_random_point(f, rng)) + 0.05
    base = ci.power(f, p, circ).p
    ref_cls = f.classify_bary(f.vertex_bary[0])
    worst = 0.0
    got = 0
    for _ in range(40):
        if got >= 8:
            break
        lam = np.cross(p, rng.normal(size=3))
        pts = co.conic_line_intersections(circ.conic, lam)
        if len(pts) != 2:
            continue
        if any(f.classify_bary(q) is not ref_cls for q in pts):
            continue
        m0 = segment_measures(f.from_bary(p), f.from_bary(pts[0]), f.pol)
        m1 = segment_measures(f.from_bary(p), f.from_bary(pts[1]), f.pol)
        best = None
        for a in m0:
            for b in m1:
                if not (a.finite and b.finite):
                    continue
                v = np.tanh(a.as_complex() / 2) * np.tanh(b.as_complex() / 2)
                r = min(abs(v - base), abs(v + base))
                best = r if best is None else min(best, r)
        if best is None:
            continue
        got += 1
        worst = max(worst, best / max(1.0, abs(base)))
    return worst if got >= 4 else None


def _power_friendly_frame(f, rng):
    """Resample small elliptic frames so chords avoid the far conic sheet."""
    from ..frame import build_frame
    from ..projective import Polarity

    if f.rho < 0:
        return f
    for _ in range(200):
        pts = [np.array([1.0, *rng.uniform(-0.45, 0.45, size=2)]) for _ in range(3)]
        try:
            cand = build_frame(*pts, Polarity(f.rho))
        except GeometryError:
            continue
        if abs(float(np.linalg.det(cand.V))) > 0.004:
            return cand
    return f


@claim("radical-lines", "2.4.5", "radical lines carry equal modified powers and form a harmonic pencil",
       category="circles", regimes=("elliptic", "lobachevsky", "desitter"))
def _c(f, rng, tol):
    f = _power_friendly_frame(f, rng)
    c1 = ci.circumcircle(f)
    m2 = _random_point(f, rng)
    try:
        c2 = ci.Circle.about_lax(f, m2, f.vertex_bary[1])
        l1, l2 = ci.radical_lines(f, c1, c2)
    except GeometryError:
        return None
    r1 = max(ci.modified_power_spread(f, l1, [c1, c2], rng=rng),
             ci.modified_power_spread(f, l2, [c1, c2], rng=rng))
    m1d = f.bary_dual_point(c1.center)
    m2d = f.bary_dual_point(c2.center)
    r2 = _harmonic(l1, m1d, l2, m2d)
    return max(r1, r2)


@claim("radical-centers", "2.4.6", "the four radical centers have equal modified powers and anticevian structure",
       category="circles")
def _c(f, rng, tol):
    rr = [Measure(0.0, float(v)) for v in rng.uniform(0.2, 0.6, size=3)]
    if f.regime.value in ("lobachevsky",):
        rr = [Measure(float(v), 0.0) for v in rng.uniform(0.2, 0.6, size=3)]
    rk = ci.radical_centers(f, *rr)
    circs = []
    for i in range(3):
        k = np.cosh(rr[i].as_complex()) ** 2
        con = co.circle_with_cosh2_radius(f, f.vertex_bary[i], k.real)
        circs.append(ci.Circle(conic=con, center=f.vertex_bary[i],
                               cosh_r=np.cosh(rr[i].as_complex())))
    worst = 0.0
    for r in rk:
        vals = [ci.power(f, r, c).p_tilde for c in circs]
        m = np.mean(vals)
        worst = max(worst, max(abs(v - m) for v in vals) / max(1.0, abs(m)))
    fd = dual_frame(f)
    r0d = fd.to_bary(f.from_bary(rk[0]))
    anc = anticevian_triple(fd, r0d)
    anc_main = [f.to_bary(fd.from_bary(q)) for q in anc]
    for got in anc_main:
        worst = max(worst, min(_pt_gap(got, rk[j]) for j in (1, 2, 3)))
    return worst


@claim("radical-center-specials", "2.4.6", "equal radii, split-perimeter radii and side radii give O, I and L",
       category="circles")
def _c(f, rng, tol):
    a_, b_, c_ = f.sides
    eq = Measure(0.25, 0.35)
    r0 = ci.radical_centers(f, eq, eq, eq)[0]
    worst = _pt_gap(r0, center("circumcenter", f))
    s = 0.5 * (a_.as_complex() + b_.as_complex() + c_.as_complex())

    def as_measure(z):
        return Measure(z.real, z.imag)

    ri = ci.radical_centers(f, as_measure(s - a_.as_complex()),
                            as_measure(s - b_.as_complex()),
                            as_measure(s - c_.as_complex()))[0]
    worst = max(worst, _pt_gap(ri, center("incenter", f)))
    rl = ci.radical_centers(f, a_, b_, c_)[0]
    worst = max(worst, _pt_gap(rl, center("de_longchamps", f)))
    return worst


@claim("radical-circle-orthogonal", "2.4.6", "the radical circle meets the three vertex circles orthogonally",
       category="circles")
def _c(f, rng, tol):
    rr = [Measure(0.0, float(v)) for v in rng.uniform(0.25, 0.55, size=3)]
    rk = ci.radical_centers(f, *rr)
    circs = []
    for i in range(3):
        k = np.cosh(rr[i].as_complex()) ** 2
        con = co.circle_with_cosh2_radius(f, f.vertex_bary[i], k.real)
        circs.append(ci.Circle(conic=con, center=f.vertex_bary[i],
                               cosh_r=np.cosh(rr[i].as_complex())))
    r0 = rk[0]
    ptil = ci.power(f, r0, circs[0]).p_tilde
    worst = 0.0
    for c in circs:
        cd = cosh_distance(f, r0, c.center)
        worst = max(worst, abs(cd - ptil * c.cosh_r) / max(1.0, abs(cd)))
    return worst


@claim("similitude-centers", "2.4.7", "similitude centers sit on the center join and complete a harmonic range",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    f = _power_friendly_frame(f, rng)
    c1 = ci.circumcircle(f)
    m2 = _random_point(f, rng)
    try:
        c2 = ci.Circle.about_lax(f, m2, f.vertex_bary[1])
        l1, l2 = ci.similitude_centers(f, c1, c2)
    except GeometryError:
        return None
    lam = bary_join(c1.center, c2.center)
    r1 = max(_incidence(lam, l1), _incidence(lam, l2))
    r2 = _harmonic(c1.center, l1, c2.center, l2)
    return max(r1, r2)


@claim("similitude-vertex-circles", "2.4.8", "vertex-circle similitude centers are the cevian traces and tripolar meets of the inverse-sinh point",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    rr = [Measure(0.0, float(v)) for v in rng.uniform(0.3, 0.6, size=3)]
    if f.regime.value == "lobachevsky":
        rr = [Measure(float(v), 0.0) for v in rng.uniform(0.3, 0.6, size=3)]
    circs = []
    for i in range(3):
        k = np.cosh(rr[i].as_complex()) ** 2
        con = co.circle_with_cosh2_radius(f, f.vertex_bary[i], k.real)
        circs.append(ci.Circle(conic=con, center=f.vertex_bary[i],
                               cosh_r=np.cosh(rr[i].as_complex())))
    tvals = np.array([1.0 / np.sinh(r.as_complex()) for r in rr])
    t = realize(tvals)
    traces = cevian_triple(f, t)
    tau = tripolar(f, t)
    worst = 0.0
    for (i, j), trace_idx in ((((1, 2), 0)), ((2, 0), 1), ((0, 1), 2)):
        try:
            s1, s2 = ci.similitude_centers(f, circs[i], circs[j])
        except GeometryError:
            return None
        g1 = min(_pt_gap(s1, traces[trace_idx]), _pt_gap(s2, traces[trace_idx]))
        other = s2 if _pt_gap(s1, traces[trace_idx]) < _pt_gap(s2, traces[trace_idx]) else s1
        worst = max(worst, g1, _incidence(tau, other))
    return worst


@claim("extangent-tangency", "2.4.9", "the extangent lines touch their excircle pairs",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    exc = ci.excircles(f)
    lines = ci.extangent_lines(f)
    worst = 0.0
    for i, (j, k) in enumerate(((2, 3), (3, 1), (1, 2))):
        worst = max(worst, co.line_tangency_residual(exc[j].conic, lines[i]))
        worst = max(worst, co.line_tangency_residual(exc[k].conic, lines[i]))
    return worst


@claim("extangents-bevan-incenter", "2.4.9", "the Bevan point is equidistant from the extangent lines",
       category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    lines = ci.extangent_lines(f)
    be = center("bevan", f)
    vals = []
    for lam in lines:
        foot = bary_ped(f, be, lam)
        vals.append(abs(cosh_distance(f, be, foot)))
    return (max(vals) - min(vals)) / max(1.0, max(vals))


@claim("extangents-x65", "2.4.9", "the extangents triple is perspective to the frame at the X65-limit point",
       category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    tri = ci.extangents_triple(f)
    tgt = center("x65_point", f)
    r1 = _perspector_gap(tri, f.vertex_bary, tgt)
    r2 = _pt_gap(isogonal(f, center("schiffler", f)), tgt)
    return max(r1, r2)


@claim("clawson-perspective", "2.4.9", "the extangents and orthic triples are perspective",
       category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    tri = ci.extangents_triple(f)
    orthic = pedal_triple(f, center("orthocenter", f))
    return _perspector_gap(tri, orthic, center("clawson", f))


@claim("x46-perspective", "2.4.9", "the excenters and the orthic triple are perspective at the X46-limit point",
       category="perspectivity")
def _c(f, rng, tol):
    ik = [center("incenter", f, k) for k in range(1, 4)]
    orthic = pedal_triple(f, center("orthocenter", f))
    return _perspector_gap(ik, orthic, center("x46_point", f))


# ==== 2.5 orthology and cubics ================================================


@claim("orthology-pedal", "2.5.1", "pedal triples are orthologic with centers the point and its isogonal conjugate")
def _c(f, rng, tol):
    s = _random_point(f, rng)
    trip = pedal_triple(f, s)
    res = cu.orthology(f, trip)
    if res is None:
        return 1.0
    s_got, t_got = res
    return max(_pt_gap(s_got, s), _pt_gap(t_got, isogonal(f, s)))


@claim("orthology-law", "2.5.1", "the reciprocal orthology center obeys the reciprocal-coordinate law")
def _c(f, rng, tol):
    s = _random_point(f, rng)
    d = f.Dmat
    xyz = rng.uniform(0.5, 1.5, size=3)
    trip = [s + xyz[i] * d[i] for i in range(3)]
    res = cu.orthology(f, trip)
    if res is None:
        return 1.0
    s_got, t_got = res
    return max(_pt_gap(s_got, s), _pt_gap(t_got, 1.0 / xyz))


@claim("darboux-members", "2.5.2", "the listed centers and their isogonal conjugates lie on the pedal-perspectivity cubic",
       category="cubics")
def _c(f, rng, tol):
    dar = cu.cubic("darboux", f)
    worst = 0.0
    pts = [center(cid, f) for cid in
           ("pseudo_circumcenter", "orthocenter", "de_longchamps", "bevan")]
    pts += [center("circumcenter", f, k) for k in range(4)]
    pts += [center("incenter", f, k) for k in range(4)]
    pts += [f.Dmat[i] for i in range(3)]
    for p in pts:
        worst = max(worst, dar.residual(p))
    for p in pts[:4]:
        worst = max(worst, dar.residual(isogonal(f, p)))
    return worst


@claim("darboux-companions", "2.5.2", "the cevian companions of the listed points are as stated",
       category="cubics")
def _c(f, rng, tol):
    worst = 0.0
    pairs = [
        (center("circumcenter", f), center("centroid", f)),
        (center("incenter", f), center("gergonne", f)),
        (center("pseudo_circumcenter", f), center("double_point", f)),
        (center("orthocenter", f), center("orthocenter", f)),
        (center("bevan", f), center("nagel", f)),
        (center("de_longchamps", f), isotomic(f, center("orthocenter", f))),
    ]
    for p, tgt in pairs:
        worst = max(worst, _perspector_gap(pedal_triple(f, p), f.vertex_bary, tgt))
    return worst


@claim("darboux-dual-companions", "2.5.2", "the stated dual-vertex companions are perspective to the frame at the double point",
       category="cubics")
def _c(f, rng, tol):
    y = f.c6
    comps = [
        realize(np.array([-y[0], 1.0 / y[5], 1.0 / y[4]], dtype=complex)),
        realize(np.array([1.0 / y[5], -y[1], 1.0 / y[3]], dtype=complex)),
        realize(np.array([1.0 / y[4], 1.0 / y[3], -y[2]], dtype=complex)),
    ]
    return _perspector_gap(comps, f.vertex_bary, center("double_point", f))


@claim("lucas-members", "2.5.3", "the listed centers and their isotomic conjugates lie on the cevian-perspectivity cubic",
       category="cubics")
def _c(f, rng, tol):
    luc = cu.cubic("lucas", f)
    worst = 0.0
    pts = [center(cid, f) for cid in ("double_point", "orthocenter", "de_longchamps")]
    for k in range(4):
        pts += [center("centroid", f, k), center("gergonne", f, k),
                center("nagel", f, k)]
    for p in pts:
        worst = max(worst, luc.residual(p))
        worst = max(worst, luc.residual(isotomic(f, p)))
    return worst


@claim("lucas-pedal-companion-L", "2.5.3", "the pedal companion of the de Longchamps point is the X1498-limit point on the pedal cubic",
       category="cubics")
def _c(f, rng, tol):
    l = center("de_longchamps", f)
    duals = [f.Dmat[i] for i in range(3)]
    x1498 = center("x1498_point", f)
    r1 = _perspector_gap(cevian_triple(f, l), duals, x1498)
    r2 = cu.cubic("darboux", f).residual(x1498)
    return max(r1, r2)


@claim("dual-swap-cubics", "2.5.4", "the pedal and cevian perspectivity cubics swap under frame dualization",
       grade="OBSERVATION", category="cubics")
def _c(f, rng, tol):
    fd = dual_frame(f)
    dar = cu.cubic("darboux", f)
    luc_d = cu.cubic("lucas", fd)
    pts = cu.sample_on_cubic(dar, rng, 4)
    if not pts:
        return None
    return max(luc_d.residual(fd.to_bary(f.from_bary(p))) for p in pts)


@claim("thomson-members", "2.5.5", "the listed centers lie on the normal-perspector cubic",
       category="cubics")
def _c(f, rng, tol):
    tho = cu.cubic("thomson", f)
    worst = 0.0
    pts = [center(cid, f) for cid in
           ("orthocenter", "pseudo_circumcenter", "double_point")]
    for k in range(4):
        pts += [center("incenter", f, k), center("lemoine", f, k),
                center("lemoine_conjugate", f, k)]
    for p in pts:
        worst = max(worst, tho.residual(p))
    return worst


@claim("thomson-center-curve", "2.5.5", "the orthocenter and the circumcenter and incenter mates lie on the center variant",
       category="cubics")
def _c(f, rng, tol):
    pts = [center("orthocenter", f)]
    pts += [center("circumcenter", f, k) for k in range(4)]
    pts += [center("incenter", f, k) for k in range(4)]
    if not all(cu.thomson_center_locus_test(f, z) for z in pts):
        return 1.0
    if cu.thomson_center_locus_test(f, _random_point(f, rng)):
        return 1.0
    return 0.0


@claim("pivotal-law", "2.5.2", "on-curve points have on-curve isoconjugates collinear with the pivot",
       category="cubics")
def _c(f, rng, tol):
    worst = 0.0
    for kind in ("darboux", "lucas", "thomson", "neuberg"):
        cub = cu.cubic(kind, f)
        pts = cu.sample_on_cubic(cub, rng, 6)
        for p in pts:
            if min(abs(v) for v in p) < 1e-6:
                continue
            worst = max(worst, cu.pivotal_law_residual(cub, f, p))
    return worst


# ==== 2.6 Conway, Kiepert, Hofstadter ========================================


@claim("six-point-conic-lemma", "2.6.1", "the parameterized side points are conconic and perspective at the stated point")
def _c(f, rng, tol):
    x_, y_, z_ = rng.uniform(0.4, 1.8, size=3)
    pa = np.array([0.0, x_, 1.0])
    qa = np.array([0.0, 1.0, x_])
    pb = np.array([1.0, 0.0, y_])
    qb = np.array([y_, 0.0, 1.0])
    pc = np.array([z_, 1.0, 0.0])
    qc = np.array([1.0, z_, 0.0])
    m = np.zeros((3, 3))
    m[0, 0] = m[1, 1] = m[2, 2] = 1.0
    m[1, 2] = m[2, 1] = -(x_ + 1.0 / x_) / 2
    m[2, 0] = m[0, 2] = -(y_ + 1.0 / y_) / 2
    m[0, 1] = m[1, 0] = -(z_ + 1.0 / z_) / 2
    conic = co.Conic(m)
    worst = max(conic.residual(p) for p in (pa, qa, pb, qb, pc, qc))
    x1 = bary_meet(bary_join(qc, pa), bary_join(qa, pb))
    y1 = bary_meet(bary_join(qa, pb), bary_join(qb, pc))
    z1 = bary_meet(bary_join(qb, pc), bary_join(qc, pa))
    r = np.array([1.0 / (x_ + y_ * z_), 1.0 / (y_ + z_ * x_), 1.0 / (z_ + x_ * y_)])
    worst = max(worst, _perspector_gap((x1, y1, z1), f.vertex_bary, r))
    xp = bary_meet(bary_join(qb, pc), f.sideline_bary[0])
    yp = bary_meet(bary_join(qc, pa), f.sideline_bary[1])
    zp = bary_meet(bary_join(qa, pb), f.sideline_bary[2])
    worst = max(worst, max(_incidence(tripolar(f, np.array([x_, y_, z_])), p)
                           for p in (xp, yp, zp)))
    xs = bary_meet(bary_join(qc, pb), f.sideline_bary[0])
    ys = bary_meet(bary_join(qa, pc), f.sideline_bary[1])
    zs = bary_meet(bary_join(qb, pa), f.sideline_bary[2])
    worst = max(worst, max(_incidence(
        tripolar(f, np.array([y_ * z_, z_ * x_, x_ * y_])), p)
        for p in (xs, ys, zs)))
    return worst


@claim("conway-circle", "2.6.2", "the six reflected side points are concyclic about the incenter with the product radius",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    f = _power_friendly_frame(f, rng)
    pts, circ = ci.conway_circle(f)
    i0 = center("incenter", f)
    worst = max(circ.conic.residual(p) for p in pts)
    a_, b_, c_ = (m.as_complex() for m in f.sides)
    s = 0.5 * (a_ + b_ + c_)
    rin = cosh_distance(f, i0, bary_ped(f, i0, f.sideline_bary[0]))
    worst = max(worst, abs(circ.cosh_r - np.cosh(s) * rin) / max(1.0, abs(circ.cosh_r)))
    r23, r32, r31, r13, r12, r21 = pts
    meets = [
        bary_meet(bary_join(r23, r32), f.sideline_bary[0]),
        bary_meet(bary_join(r31, r13), f.sideline_bary[1]),
        bary_meet(bary_join(r12, r21), f.sideline_bary[2]),
    ]
    return max(worst, _collinearity(meets))


@claim("kiepert-angle-lemma", "2.6.4", "the dual-lemma apices subtend equal paired angles and are perspective at the weighted point")
def _c(f, rng, tol):
    from ..measure import angle_measures

    x_, y_, z_ = rng.uniform(0.4, 1.6, size=3)
    p1, p2, p3 = kiepert_apices(f, x_, y_, z_)
    a, b, c = (f.from_bary(v) for v in f.vertex_bary)
    pv = [f.from_bary(p) for p in (p1, p2, p3)]

    def angle_cosh(q, s, r):
        mp, _ = angle_measures(q, s, r, f.pol)
        return np.cosh(mp.as_complex())

    worst = 0.0
    pairs = [
        ((b, a, pv[2]), (c, a, pv[1])),
        ((c, b, pv[0]), (a, b, pv[2])),
        ((b, c, pv[0]), (a, c, pv[1])),
    ]
    for (q1, s1, r1), (q2, s2, r2) in pairs:
        v1 = angle_cosh(q1, s1, r1)
        v2 = angle_cosh(q2, s2, r2)
        worst = max(worst, min(abs(v1 - v2), abs(v1 + v2)) / max(1.0, abs(v1)))
    u = [csqrt(f.d6[i]) for i in range(3)]
    r = realize(np.array([x_ * u[0], y_ * u[1], z_ * u[2]]))
    worst = max(worst, _perspector_gap((p1, p2, p3), f.vertex_bary, r))
    qs = [
        bary_meet(bary_join(p3, f.vertex_bary[1]), bary_join(p2, f.vertex_bary[2])),
        bary_meet(bary_join(p1, f.vertex_bary[2]), bary_join(p3, f.vertex_bary[0])),
        bary_meet(bary_join(p2, f.vertex_bary[0]), bary_join(p1, f.vertex_bary[1])),
    ]
    worst = max(worst, _perspector_gap(qs, f.vertex_bary, isogonal(f, r)))
    return worst


@claim("kiepert-conic", "2.6.4", "equal-base-angle perspectors lie on the circumconic through the centroid and orthocenter",
       regimes=CURVED)
def _c(f, rng, tol):
    kc = kiepert_conic(f)
    worst = max(kc.residual(np.ones(3)), kc.residual(center("orthocenter", f)))
    for x_ in rng.uniform(0.3, 1.5, size=2):
        try:
            p = kiepert_point(f, float(x_))
        except GeometryError:
            return None
        worst = max(worst, kc.residual(p))
    return worst


@claim("kiepert-isogonal-line", "2.6.4", "isogonal Kiepert images lie on the symmedian join of the circle centers",
       regimes=CURVED)
def _c(f, rng, tol):
    k = symmedian_point(f)
    op = center("pseudo_circumcenter", f)
    lam = bary_join(k, op)
    worst = 0.0
    for cid in ("circumcenter", "lemoine"):
        worst = max(worst, _incidence(lam, center(cid, f)))
    kt = evaluate(CENTERS["lemoine"], f)
    worst = max(worst, _incidence(lam, star(f, kt)))
    for x_ in rng.uniform(0.4, 1.4, size=2):
        try:
            p = kiepert_point(f, float(x_))
        except GeometryError:
            return None
        worst = max(worst, _incidence(lam, isogonal(f, p)))
    x110 = center("x110_point", f)
    worst = max(worst, ci.circumcircle(f).conic.residual(x110))
    return worst


@claim("hofstadter-points", "2.6.4", "the half, minus-one and two parameter points are I, H and O+",
       regimes=CURVED)
def _c(f, rng, tol):
    r1 = _pt_gap(hofstadter_point(f, 0.5), center("incenter", f))
    r2 = _pt_gap(hofstadter_point(f, -1.0), center("orthocenter", f))
    r3 = _pt_gap(hofstadter_point(f, 2.0), center("pseudo_circumcenter", f))
    k = float(rng.uniform(0.15, 0.45))
    r4 = _pt_gap(isogonal(f, hofstadter_point(f, k)), hofstadter_point(f, 1 - k))
    al, be, ga = (m.as_complex() for m in f.angles)
    zero = realize(np.array([al, be, ga]))
    r5 = _pt_gap(hofstadter_point(f, 0.0), zero)
    return max(r1, r2, r3, r4, r5)


# ==== 2.7 Lemoine conic, axis, Tucker ========================================


def _associated_conic(f, p, lam):
    p = np.asarray(p, dtype=float)
    q = np.asarray(lam, dtype=float)
    m = np.zeros((3, 3))
    idx = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    for j, (a, b, c_) in enumerate(idx):
        m[a, a] = q[a] * (p[b] * q[b] + p[c_] * q[c_]) / p[a]
        off = (p[a] * q[a] * (p[a] * q[a] + p[b] * q[b] + p[c_] * q[c_])
               + 2 * p[b] * q[b] * p[c_] * q[c_]) / (p[b] * p[c_])
        m[b, c_] -= off / 2
        m[c_, b] -= off / 2
    return co.Conic(m)


@claim("associated-conic", "2.7.1", "the six chain points lie on the associated conic with the stated perspector")
def _c(f, rng, tol):
    p = np.abs(_random_point(f, rng)) + 0.2
    lam = np.asarray(_random_point(f, rng))
    if np.min(np.abs(lam)) < 1e-3:
        return None
    conic = _associated_conic(f, p, lam)
    pts = []
    for i in range(3):
        p11 = bary_meet(lam, f.sideline_bary[i])
        for j in range(3):
            if j == i:
                continue
            pts.append(bary_meet(bary_join(p11, p), f.sideline_bary[j]))
    worst = max(conic.residual(q) for q in pts)
    per = co.conic_perspector(conic)
    tgt = np.array([
        p[0] / (2 * p[0] * lam[0] * (p[1] * lam[1] + p[2] * lam[2])
                + p[1] * p[2] * lam[1] * lam[2]),
        p[1] / (2 * p[1] * lam[1] * (p[2] * lam[2] + p[0] * lam[0])
                + p[2] * p[0] * lam[2] * lam[0]),
        p[2] / (2 * p[2] * lam[2] * (p[0] * lam[0] + p[1] * lam[1])
                + p[0] * p[1] * lam[0] * lam[1]),
    ])
    worst = max(worst, _pt_gap(per, tgt))
    conic2 = _associated_conic(f, p, tripolar(f, p))
    worst = max(worst, _pt_gap(co.conic_perspector(conic2), p))
    return worst


@claim("lemoine-axis-perpendicular", "2.7.2", "the tripolar of the circle perspector is perpendicular to the symmedian-circumcenter join",
       regimes=CURVED)
def _c(f, rng, tol):
    kt = evaluate(CENTERS["lemoine"], f)
    axis = tripolar(f, kt)
    lam = bary_join(center("circumcenter", f), symmedian_point(f))
    return _line_orth(f, axis, lam)


@claim("apollonian-orthogonal", "2.7.2", "the apollonian circles meet the circumcircle orthogonally",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    circs = ci.apollonian_circles(f)
    c0 = ci.circumcircle(f)
    worst = 0.0
    for c in circs:
        cd = cosh_distance(f, c.center, c0.center)
        rhs = c.cosh_r * c0.cosh_r
        worst = max(worst, min(abs(cd - rhs), abs(cd + rhs)) / max(1.0, abs(cd)))
    return worst


@claim("apollonian-isodynamic", "2.7.2", "the isodynamic pair lies on all three apollonian circles and on the symmedian join",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    circs = ci.apollonian_circles(f)
    jp = center("isodynamic_plus", f)
    jm = center("isodynamic_minus", f)
    worst = 0.0
    for c in circs:
        worst = max(worst, c.conic.residual(jp), c.conic.residual(jm))
    lam = bary_join(center("circumcenter", f), symmedian_point(f))
    worst = max(worst, _incidence(lam, jp), _incidence(lam, jm))
    kt = evaluate(CENTERS["lemoine"], f)
    worst = max(worst, _harmonic(jm, center("circumcenter", f), jp, kt))
    return worst


@claim("apollonius-ratio", "2.7.2", "points of an apollonian circle keep the half-measure sinh ratio",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    c1 = ci.apollonian_circles(f)[0]
    b_, c_ = f.sides[1].as_complex(), f.sides[2].as_complex()
    target = abs(np.sinh(c_ / 2) / np.sinh(b_ / 2))
    # Stay on the sheet of the defining vertex: the conic may carry a
    # complementary branch where the half-measures swap roles.
    mnorm = c1.center / math.sqrt(abs(f.bary_form(c1.center, c1.center)))
    ref = f.bary_form(mnorm, f.vertex_bary[0]) / math.sqrt(
        abs(f.bary_form(f.vertex_bary[0], f.vertex_bary[0])))
    worst = 0.0
    got = 0
    for _ in range(24):
        if got >= 4:
            break
        lam = np.cross(c1.center, rng.normal(size=3))
        for x in co.conic_line_intersections(c1.conic, lam):
            xx = f.bary_form(x, x)
            if abs(xx) < 1e-9 * float(x @ x) * np.linalg.norm(f.Cmat):
                continue
            side = f.bary_form(mnorm, x / math.sqrt(abs(xx)))
            if side * ref < 0:
                continue
            mbs = segment_measures(f.from_bary(x), f.from_bary(f.vertex_bary[1]), f.pol)
            mcs = segment_measures(f.from_bary(x), f.from_bary(f.vertex_bary[2]), f.pol)
            best = None
            for mb in mbs:
                for mc in mcs:
                    if not (mb.finite and mc.finite):
                        continue
                    ratio = (abs(np.sinh(mb.as_complex() / 2))
                             / abs(np.sinh(mc.as_complex() / 2)))
                    r = abs(ratio - target) / max(1.0, target)
                    best = r if best is None else min(best, r)
            if best is None:
                continue
            worst = max(worst, best)
            got += 1
    return worst if got >= 2 else None


@claim("apollonian-midpoints", "2.7.2", "the isodynamic semi-midpoints are the stated Lemoine-derived points",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    jp = center("isodynamic_plus", f)
    jm = center("isodynamic_minus", f)
    kt = evaluate(CENTERS["lemoine"], f)
    lam = bary_join(center("circumcenter", f), symmedian_point(f))
    plus, minus, _ = semi_midpoints(f.from_bary(jp), f.from_bary(jm), f.pol)
    t1 = star(f, kt)
    t2 = bary_meet(tripolar(f, kt), lam)
    g1 = min(_pt_gap(f.to_bary(plus), t1) + _pt_gap(f.to_bary(minus), t2),
             _pt_gap(f.to_bary(plus), t2) + _pt_gap(f.to_bary(minus), t1))
    return g1


@claim("tucker-hexagon", "2.7.3", "random Tucker chains close into concyclic hexagons centered on the circumcenter-perspector join",
       category="tucker", regimes=CURVED)
def _c(f, rng, tol):
    hexg = None
    for _ in range(6):
        try:
            hexg = ci.tucker_hexagon(f, float(rng.uniform(0.2, 2.5)))
            break
        except GeometryError:
            continue
    if hexg is None:
        return None
    res, _ = co.concyclicity_residual(list(hexg.points()), f)
    o = center("circumcenter", f)
    kt = evaluate(CENTERS["lemoine"], f)
    lam = bary_join(o, kt)
    return max(res, _incidence(lam, hexg.center))


@claim("tucker-rt-perspectors", "2.7.3", "the Tucker diagonal triples are perspective at the circle perspector",
       category="tucker", regimes=CURVED)
def _c(f, rng, tol):
    hexg = None
    for _ in range(6):
        try:
            hexg = ci.tucker_hexagon(f, float(rng.uniform(0.3, 2.0)))
            break
        except GeometryError:
            continue
    if hexg is None:
        return None
    kt = evaluate(CENTERS["lemoine"], f)
    rt, tt = ci.tucker_r_t_triples(f, hexg)
    return max(_perspector_gap(rt, f.vertex_bary, kt),
               _perspector_gap(tt, f.vertex_bary, kt))


@claim("tucker-closure", "2.7.3", "the closing Tucker side is antiparallel to its sideline",
       category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    f = _power_friendly_frame(f, rng)
    hexg = None
    for _ in range(16):
        try:
            hexg = ci.tucker_hexagon(f, float(rng.uniform(-2.0, 2.5)))
            break
        except GeometryError:
            continue
    if hexg is None:
        return None
    lam = bary_join(hexg.q3, hexg.p1)
    return 0.0 if ci.antiparallel(f, lam, f.sideline_bary[1], 1) else 1.0


@claim("lemoine-circle-1", "2.7.3", "a Tucker chain with parallel sides through the circle perspector exists and is concyclic",
       category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    try:
        hexg = ci.lemoine_circle(f, 1)
    except GeometryError:
        return None
    res, _ = co.concyclicity_residual(list(hexg.points()), f)
    kt = evaluate(CENTERS["lemoine"], f)
    sides = ci._lemoine_sides(hexg, 1)
    return max(res, max(_incidence(lam, kt) for lam in sides))


@claim("lemoine-circle-2", "2.7.3", "a Tucker chain with antiparallel sides through the circle perspector exists and is concyclic",
       category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    try:
        hexg = ci.lemoine_circle(f, 2)
    except GeometryError:
        return None
    res, _ = co.concyclicity_residual(list(hexg.points()), f)
    kt = evaluate(CENTERS["lemoine"], f)
    sides = ci._lemoine_sides(hexg, 2)
    return max(res, max(_incidence(lam, kt) for lam in sides))


@claim("lemoine-circle-3", "2.7.3", "the third Lemoine chain is a Tucker hexagon",
       category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    try:
        hexg = ci.lemoine_circle(f, 3)
    except GeometryError:
        return None
    res, _ = co.concyclicity_residual(list(hexg.points()), f)
    o = center("circumcenter", f)
    kt = evaluate(CENTERS["lemoine"], f)
    lam = bary_join(o, kt)
    return max(res, _incidence(lam, hexg.center))


@claim("tucker-gr-conjecture", "2.7.3", "the alternate side meets are collinear on lines meeting on the dual of the Tucker center",
       grade="CONJECTURE", category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    hexg = None
    for _ in range(6):
        try:
            hexg = ci.tucker_hexagon(f, float(rng.uniform(0.3, 1.8)))
            break
        except GeometryError:
            continue
    if hexg is None:
        return None
    g_pts = [bary_meet(f.sideline_bary[0], bary_join(hexg.p2, hexg.q3)),
             bary_meet(f.sideline_bary[1], bary_join(hexg.p3, hexg.q1)),
             bary_meet(f.sideline_bary[2], bary_join(hexg.p1, hexg.q2))]
    r_pts = [bary_meet(f.sideline_bary[0], bary_join(hexg.q2, hexg.p3)),
             bary_meet(f.sideline_bary[1], bary_join(hexg.q3, hexg.p1)),
             bary_meet(f.sideline_bary[2], bary_join(hexg.q1, hexg.p2))]
    r1 = _collinearity(g_pts)
    r2 = _collinearity(r_pts)
    g = bary_join(g_pts[0], g_pts[1])
    r = bary_join(r_pts[0], r_pts[1])
    meet = bary_meet(g, r)
    td = f.bary_dual_point(hexg.center)
    return max(r1, r2, _incidence(td, meet))


@claim("apollonius-is-tucker", "2.7.3", "a circle on the Tucker line is tangent to all three excircles",
       grade="CONJECTURE", category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    from scipy.optimize import fsolve
    from ..measure import normalize

    f = _power_friendly_frame(f, rng)
    exc = ci.excircles(f)[1:]
    radii = [np.arccosh(complex(c.cosh_r)) for c in exc]
    if any(abs(r.real) > 1e-9 for r in radii):
        return None
    o = f.to_bary(normalize(f.from_bary(center("circumcenter", f)), f.pol).vec)
    kt = f.to_bary(normalize(
        f.from_bary(evaluate(CENTERS["lemoine"], f)), f.pol).vec)

    def on_line(t):
        return math.cos(t) * o + math.sin(t) * kt

    def residuals(v):
        x = on_line(v[0])
        out = []
        for c, rk in zip(exc[:2], radii[:2]):
            cd = cosh_distance(f, x, c.center)
            out.append((cd - np.cos(v[1] - rk.imag)).real)
        return out

    best = None
    for t0 in np.linspace(-1.4, 1.4, 8):
        for r0 in (0.4, 0.9, 1.3):
            try:
                sol, info, ier, _ = fsolve(residuals, [t0, r0], full_output=True)
            except Exception:
                continue
            if ier != 1 or max(abs(u) for u in residuals(sol)) > 1e-11:
                continue
            x = on_line(sol[0])
            third = abs((cosh_distance(f, x, exc[2].center)
                         - np.cos(sol[1] - radii[2].imag)).real)
            if best is None or third < best:
                best = third
    return best


@claim("lemoine-associated-conic", "2.7.3", "the first Lemoine circle is the conic associated with the perspector and the cross-meet line",
       grade="CONJECTURE", category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    try:
        hexg = ci.lemoine_circle(f, 1)
    except GeometryError:
        return None
    kt = evaluate(CENTERS["lemoine"], f)
    g_pts = [bary_meet(f.sideline_bary[0], bary_join(hexg.p2, hexg.q3)),
             bary_meet(f.sideline_bary[1], bary_join(hexg.p3, hexg.q1)),
             bary_meet(f.sideline_bary[2], bary_join(hexg.p1, hexg.q2))]
    if _collinearity(g_pts) > 1e-7:
        return None
    g = bary_join(g_pts[0], g_pts[1])
    if np.min(np.abs(kt)) < 1e-6 * np.max(np.abs(kt)):
        return None
    conic = _associated_conic(f, np.abs(kt) * np.sign(kt[np.argmax(np.abs(kt))]), g)
    from ..conics import matrices_proportional

    return 0.0 if matrices_proportional(conic.M, hexg.circle.conic.M, 1e-6) else 1.0


@claim("pkj-perspectors", "2.3.3", "all sixteen circumcenter-pedal against dual-incenter-pedal pairs are perspective",
       grade="CONJECTURE", category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    fd = dual_frame(f)
    worst = 0.0
    for j in range(4):
        ped_o = pedal_triple(f, center("circumcenter", f, j))
        for k in range(4):
            i_dual = fd.to_bary(f.from_bary(center("incenter", f, k)))
            ped_i = [f.to_bary(fd.from_bary(q)) for q in pedal_triple(fd, i_dual)]
            worst = max(worst, perspectivity_residual(ped_o, ped_i))
    return worst


@claim("dual-tucker", "2.7.4", "the polarity image of a Tucker circle is a conic tangent to the six dual lines",
       category="tucker", regimes=("elliptic",))
def _c(f, rng, tol):
    hexg = None
    for _ in range(6):
        try:
            hexg = ci.tucker_hexagon(f, float(rng.uniform(0.3, 1.8)))
            break
        except GeometryError:
            continue
    if hexg is None:
        return None
    dual = co.dual_conic(hexg.circle.conic, f)
    worst = 0.0
    for p in hexg.points():
        lam = f.bary_dual_point(p)
        worst = max(worst, co.line_tangency_residual(dual, lam))
    return worst


# ==== 2.7-lemmas: pseudoparallels ============================================


@claim("pseudoparallel-perspector", "2.7.5", "the tripolar-chord triple is perspective at the weighted-reciprocal point")
def _c(f, rng, tol):
    q = np.abs(_random_point(f, rng)) + 0.3
    triple = [np.abs(_random_point(f, rng)) + 0.2 for _ in range(3)]
    tgt = cu.pseudoparallel_perspector(f, triple, q)
    taus = cevian_triple(f, q)
    qline = tripolar(f, q)
    lines = []
    for k in range(3):
        qk = bary_meet(qline, f.sideline_bary[k])
        lines.append(bary_join(triple[k], qk))
    pts = [bary_meet(lines[1], lines[2]), bary_meet(lines[2], lines[0]),
           bary_meet(lines[0], lines[1])]
    worst = _perspector_gap(pts, f.vertex_bary, tgt)
    anc = anticevian_triple(f, q)
    worst = max(worst, _pt_gap(cu.pseudoparallel_perspector(f, anc, q), q))
    r = np.abs(_random_point(f, rng)) + 0.25
    conic = co.circumconic(f, r)
    qq = None
    for _ in range(8):
        lam = np.cross(rng.normal(size=3), rng.normal(size=3))
        cand = co.conic_line_intersections(conic, lam)
        for cpt in cand:
            if np.min(np.abs(cpt)) > 1e-3 * np.max(np.abs(cpt)):
                qq = cpt
                break
        if qq is not None:
            break
    if qq is not None:
        anc_r = anticevian_triple(f, r)
        worst = max(worst, _pt_gap(cu.pseudoparallel_perspector(f, anc_r, qq), qq))
    return worst


@claim("pseudoparallel-equal-distance", "2.7.5", "the side-mixed pseudoparallels keep equal vertex distances and stay perspective",
       regimes=CURVED)
def _c(f, rng, tol):
    from ..measure import normalize, point_line_distance

    a_, b_, c_ = (m.as_complex() for m in f.sides)
    duals = [f.Dmat[i] for i in range(3)]
    e = f.vertex_bary

    def mix(s, v1, c, v2):
        s = s / 1j if abs(s.imag) > abs(s.real) else s
        c = c / 1j if abs(c.imag) > abs(c.real) else c
        u1 = f.to_bary(normalize(f.from_bary(v1), f.pol).vec)
        u2 = f.to_bary(normalize(f.from_bary(v2), f.pol).vec)
        return realize(np.array(s * u1 + c * u2, dtype=complex))

    p1 = mix(np.sinh(a_), duals[0], np.cosh(a_), e[1])
    p2 = mix(np.sinh(b_), duals[1], np.cosh(b_), e[2])
    p3 = mix(np.sinh(c_), duals[2], np.cosh(c_), e[0])
    gline = tripolar(f, np.ones(3))
    lines = []
    for k, p in enumerate((p1, p2, p3)):
        qk = bary_meet(gline, f.sideline_bary[k])
        lines.append(bary_join(p, qk))
    worst = 0.0
    for k, (i, j) in zip(range(3), ((1, 2), (2, 0), (0, 1))):
        d1 = point_line_distance(f.from_bary(e[i]), f.line_from_bary(lines[k]), f.pol)
        d2 = point_line_distance(f.from_bary(e[j]), f.line_from_bary(lines[k]), f.pol)
        if not d1.approx_eq(d2, 1e-7):
            worst = max(worst, abs(d1.re - d2.re) + abs(d1.im - d2.im))
    pts = [bary_meet(lines[1], lines[2]), bary_meet(lines[2], lines[0]),
           bary_meet(lines[0], lines[1])]
    worst = max(worst, perspectivity_residual(pts, list(e)))
    return worst


@claim("pseudoparallel-collinear", "2.7.5", "the shifted-triple side meets are collinear on the tripolar of the shift point")
def _c(f, rng, tol):
    r = np.abs(_random_point(f, rng)) + 0.3
    t = rng.uniform(0.3, 1.2, size=3)
    r1 = r + np.array([t[0], 0, 0])
    r2 = r + np.array([0, t[1], 0])
    r3 = r + np.array([0, 0, t[2]])
    pts = [
        bary_meet(bary_join(r2, r3), f.sideline_bary[0]),
        bary_meet(bary_join(r3, r1), f.sideline_bary[1]),
        bary_meet(bary_join(r1, r2), f.sideline_bary[2]),
    ]
    lam = tripolar(f, t)
    return max(_collinearity(pts), max(_incidence(lam, p) for p in pts))


@claim("pseudoparallel-ceva", "2.7.5", "second circumconic intersections give the Ceva point of the perspector pair")
def _c(f, rng, tol):
    r = np.abs(_random_point(f, rng)) + 0.3
    p = np.abs(_random_point(f, rng)) + 0.3
    conic = co.circumconic(f, p)
    outs = []
    for i, v in enumerate(f.vertex_bary):
        lam = bary_join(r, v)
        cands = co.conic_line_intersections(conic, lam)
        second = None
        for cpt in cands:
            if not proj_equal(cpt, v, 1e-7):
                second = cpt
        if second is None:
            return None
        outs.append(second)
    pts = [
        bary_meet(bary_join(outs[1], outs[2]), f.sideline_bary[0]),
        bary_meet(bary_join(outs[2], outs[0]), f.sideline_bary[1]),
        bary_meet(bary_join(outs[0], outs[1]), f.sideline_bary[2]),
    ]
    lam = tripolar(f, cu.ceva_point(p, r))
    return max(_incidence(lam, q) for q in pts)


# ==== 2.8 isoptics and isogonic points =======================================


@claim("isoptic-self", "2.8.1", "the reference point lies on its own isoptic and right angles collapse to the thaloid")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    q = _random_point(f, rng)
    r = _random_point(f, rng)
    iso = cu.isoptic(f, p, q, r)
    worst = iso.residual(r)
    th = cu.thaloid(f, p, q)
    for x in co.conic_line_intersections(th, np.cross(r, rng.normal(size=3))):
        l1 = bary_join(x, p)
        l2 = bary_join(x, q)
        d = line_distance(f.line_from_bary(l1), f.line_from_bary(l2), f.pol)
        if not d.approx_eq(Measure(0.0, math.pi / 2), 1e-7):
            worst = max(worst, abs(d.im - math.pi / 2))
    return worst


@claim("apollonian-thaloids", "2.8.2", "a common point of two vertex thaloids lies on the third",
       regimes=CURVED)
def _c(f, rng, tol):
    i0 = center("incenter", f)
    tr = cevian_triple(f, i0)
    tau = tripolar(f, i0)
    p123 = [bary_meet(tau, f.sideline_bary[i]) for i in range(3)]
    ths = [cu.thaloid(f, tr[i], p123[i]) for i in range(3)]
    pts = co.conic_conic_intersections(ths[0], ths[1])
    if not pts:
        return None
    return max(ths[2].residual(p) for p in pts)


@claim("isogonic-points", "2.8.3", "isogonic points satisfy the three third-angle line distances",
       regimes=CURVED)
def _c(f, rng, tol):
    sols = cu.isogonic_points(f)
    if not sols:
        return None
    worst = 0.0
    for s in sols:
        for i, j in ((0, 1), (1, 2), (2, 0)):
            li = bary_join(s, f.vertex_bary[i])
            lj = bary_join(s, f.vertex_bary[j])
            d = line_distance(f.line_from_bary(li), f.line_from_bary(lj), f.pol)
            worst = max(worst, abs(d.re) + abs(d.im - math.pi / 3))
    return worst


@claim("fermat-minimality", "2.8.3", "an interior isogonic point locally minimizes the vertex distance sum",
       regimes=("lobachevsky",), tol=1e-10, category="search")
def _c(f, rng, tol):
    best = None
    for s in cu.isogonic_points(f):
        if np.all(s > 0) or np.all(s < 0):
            best = np.abs(s)
            break
    if best is None:
        return None
    base = cu.distance_sum(f, best)
    worst = 0.0
    for _ in range(24):
        d = rng.normal(size=3)
        probe = np.abs(best + 1e-3 * d / np.linalg.norm(d))
        if np.any(probe <= 0):
            continue
        val = cu.distance_sum(f, probe)
        worst = max(worst, base - val)
    return max(0.0, worst)


@claim("isogonic-orthocorrespondent", "2.8.3", "isogonic points are fixed by the orthocorrespondent map",
       grade="CONJECTURE", regimes=CURVED)
def _c(f, rng, tol):
    sols = cu.isogonic_points(f)
    if not sols:
        return None
    return max(_pt_gap(orthocorrespondent(f, s), s) for s in sols)


# ==== 2.9 reflection triples and the Neuberg family ==========================


@claim("reflection-collinearity-cubic", "2.9.1", "reflections in the sidelines are collinear exactly on the cubic",
       category="cubics")
def _c(f, rng, tol):
    rc = cu.reflection_collinearity_cubic(f)
    pts = cu.sample_on_cubic(rc, rng, 4)
    if not pts:
        return None
    worst = 0.0
    for p in pts:
        trip = cu.reflection_triple(f, p)
        worst = max(worst, _collinearity(trip))
    off = _random_point(f, rng)
    if _collinearity(cu.reflection_triple(f, off)) < 1e-4 and rc.residual(off) > 1e-3:
        worst = max(worst, 1.0)
    return worst


@claim("reflection-circumcenter", "2.9.1", "the circumcenter quadruple of the reflection triangle contains the isogonal conjugate",
       category="cubics")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    trip = cu.reflection_triple(f, p)
    try:
        sub = subframe(f, *trip)
    except GeometryError:
        return None
    tgt = isogonal(f, p)
    return min(_pt_gap(f.to_bary(sub.from_bary(center("circumcenter", sub, k))), tgt)
               for k in range(4))


@claim("cevian-quotient-perspector", "2.9.1", "the anticevian and reflection triples are perspective at the stated quotient")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    anc = anticevian_triple(f, p)
    trip = cu.reflection_triple(f, p)
    return _perspector_gap(anc, trip, cu.cevian_quotient_perspector(f, p))


@claim("cevian-reflection-orthoaxis", "2.9.1", "the cevian-trace reflection perspector of H and L lies on the orthoaxis")
def _c(f, rng, tol):
    p = _random_point(f, rng)
    trip = list(cu.cevian_sideline_reflections(f, p))
    got = perspector(trip, f.vertex_bary, tol=1e-6)
    if got is None:
        return 1.0
    worst = _pt_gap(got, cu.cevian_reflection_perspector(f, p))
    ax = orthoaxis(f)
    for cid in ("orthocenter", "de_longchamps"):
        q = cu.cevian_reflection_perspector(f, center(cid, f))
        worst = max(worst, _incidence(ax, q))
    return worst


@claim("neuberg-members", "2.9.2", "the reflection-perspectivity cubic carries the stated points",
       category="cubics", regimes=CURVED)
def _c(f, rng, tol):
    neu = cu.cubic("neuberg", f)
    worst = 0.0
    ids = ("orthocenter", "pseudo_circumcenter", "orthostar", "isodynamic_plus",
           "isodynamic_minus", "evans", "neuberg_w2", "neuberg_w3")
    for cid in ids:
        p = center(cid, f)
        worst = max(worst, neu.residual(p))
        worst = max(worst, neu.residual(isogonal(f, p)))
    for k in range(4):
        worst = max(worst, neu.residual(center("incenter", f, k)))
    return worst


@claim("evans-perspector", "2.9.2", "the excenters and the vertex reflections are perspective at the Evans point",
       category="perspectivity")
def _c(f, rng, tol):
    ik = [center("incenter", f, k) for k in range(1, 4)]
    vr = cu.vertex_reflections(f)
    return _perspector_gap(ik, vr, center("evans", f))


@claim("neuberg-map-table", "2.9.2", "the reflection-triple map sends the table points as stated",
       category="cubics")
def _c(f, rng, tol):
    pairs = [
        ("orthocenter", "orthocenter"),
        ("pseudo_circumcenter", "pseudo_ninepoint"),
        ("orthostar", "w5_pivot"),
        ("incenter", "w6_point"),
        ("evans", "w7_point"),
        ("neuberg_w2", "orthostar"),
        ("neuberg_w3", "w8_point"),
    ]
    worst = 0.0
    for src, dst in pairs:
        got = cu.neuberg_forward(f, center(src, f))
        if got is None:
            return 1.0
        worst = max(worst, _pt_gap(got, center(dst, f)))
    return worst


@claim("neuberg-reverse-table", "2.9.2", "the anticevian-reflection map sends the second table points as stated",
       category="cubics")
def _c(f, rng, tol):
    pairs = [
        ("orthocenter", "orthocenter"),
        ("pseudo_circumcenter", "neuberg_w2"),
        ("w9_point", "pseudo_circumcenter"),
        ("incenter", "evans"),
        ("w10_point", "incenter"),
        ("pseudo_ninepoint", "orthostar"),
        ("w11_point", "neuberg_w3"),
    ]
    worst = 0.0
    for src, dst in pairs:
        got = cu.neuberg_reverse(f, center(src, f))
        if got is None:
            return 1.0
        worst = max(worst, _pt_gap(got, center(dst, f)))
    return worst


@claim("pk-w4w5-members", "2.9.2", "the table images lie on the reflection-cevian cubic",
       category="cubics")
def _c(f, rng, tol):
    cub = cu.cubic("pk_w4_w5", f)
    worst = 0.0
    for cid in ("orthocenter", "pseudo_ninepoint", "w5_pivot", "w6_point",
                "w7_point", "orthostar", "w8_point"):
        worst = max(worst, cub.residual(center(cid, f)))
    return worst


@claim("pk-k-nplus-members", "2.9.2", "the second-table sources lie on the anticevian-reflection cubic",
       category="cubics")
def _c(f, rng, tol):
    cub = cu.cubic("pk_k_nplus", f)
    worst = 0.0
    for cid in ("orthocenter", "pseudo_circumcenter", "w9_point", "incenter",
                "w10_point", "pseudo_ninepoint", "w11_point"):
        worst = max(worst, cub.residual(center(cid, f)))
    return worst


@claim("pk-w4w5-conditions", "2.9.2", "reflection-cevian perspectivity holds on sampled cubic points",
       category="cubics")
def _c(f, rng, tol):
    cub = cu.cubic("pk_w4_w5", f)
    pts = cu.sample_on_cubic(cub, rng, 4)
    if not pts:
        return None
    worst = 0.0
    vr = cu.vertex_reflections(f)
    for p in pts:
        if np.min(np.abs(p)) < 1e-5 * np.max(np.abs(p)):
            continue
        trip = cu.reflection_triple(f, p)
        cev = cevian_triple(f, p)
        worst = max(worst, perspectivity_residual(list(trip), list(cev)))
        worst = max(worst, perspectivity_residual(list(trip), list(vr)))
        worst = max(worst, perspectivity_residual(list(cev), list(vr)))
    return worst


# ==== 2.10 Euler substitutes ==================================================


@claim("gh-line-equation", "2.10.4", "the stated line equation carries the centroid, orthocenter and tangent-circle center")
def _c(f, rng, tol):
    x = f.d6
    lam = np.array([
        x[3] * (x[4] - x[5]),
        x[4] * (x[5] - x[3]),
        x[5] * (x[3] - x[4]),
    ])
    worst = max(_incidence(lam, np.ones(3)),
                _incidence(lam, center("orthocenter", f)),
                _incidence(lam, center("hart_center", f)))
    return worst


@claim("hart-circle", "2.10.4", "the tangent circle touches the incircle and all three excircles",
       category="circles", regimes=CURVED, tol=1e-7)
def _c(f, rng, tol):
    hc = ci.hart_circle(f)
    exc = ci.excircles(f)
    return max(co.tangency_residual(hc.conic, e.conic) for e in exc)


@claim("salmon-relation", "2.10.4", "the tangent-circle radius satisfies tanh r = half tanh R",
       category="circles", regimes=CURVED)
def _c(f, rng, tol):
    hc = ci.hart_circle(f)
    cc = ci.circumcircle(f)
    rh = hc.radius(f).as_complex()
    rr = cc.radius(f).as_complex()
    val = np.tanh(rh) - 0.5 * np.tanh(rr)
    return min(abs(val), abs(np.tanh(rh) + 0.5 * np.tanh(rr)))


@claim("feuerbach-touchpoints", "2.10.4", "the stated touchpoints lie on both tangent conics and are perspective at the X12-limit point",
       category="perspectivity", regimes=CURVED)
def _c(f, rng, tol):
    hc = ci.hart_circle(f)
    exc = ci.excircles(f)
    fps = ci.feuerbach_points(f)
    worst = 0.0
    for k in range(4):
        worst = max(worst, exc[k].conic.residual(fps[k]), hc.conic.residual(fps[k]))
    worst = max(worst, _perspector_gap(fps[1:], f.vertex_bary,
                                       center("x12_point", f)))
    from ..projective import harmonic_conjugate

    i0 = center("incenter", f)
    nh = center("hart_center", f)
    hcj = harmonic_conjugate(f.from_bary(i0), f.from_bary(nh), f.from_bary(fps[0]))
    worst = max(worst, _pt_gap(f.to_bary(hcj), center("x12_point", f)))
    return worst


@claim("dual-hart-tangency", "2.10.4", "the dual of the tangent circle touches the circumcircle",
       category="circles", regimes=CURVED, tol=1e-6, grade="OBSERVATION")
def _c(f, rng, tol):
    hc = ci.hart_circle(f)
    dual = co.dual_conic(hc.conic, f)
    return co.tangency_residual(dual, ci.circumcircle(f).conic)


@claim("akopyan-line", "2.10.5", "the equal-area point, pseudo-orthocenter, tangent-circle center and circumcenter are collinear",
       category="orthoaxis", regimes=CURVED)
def _c(f, rng, tol):
    ax = ci.akopyan_line(f)
    worst = 0.0
    for cid in ("equal_area_point", "pseudo_orthocenter", "hart_center",
                "circumcenter"):
        worst = max(worst, _incidence(ax, center(cid, f)))
    return worst


@claim("akopyan-harmonic", "2.10.5", "the pseudo-orthocenter, tangent center, equal-area point and circumcenter are harmonic",
       regimes=CURVED)
def _c(f, rng, tol):
    return _harmonic(center("pseudo_orthocenter", f), center("hart_center", f),
                     center("equal_area_point", f), center("circumcenter", f))


@claim("akopyan-angle-sum", "2.10.5", "the remeasured angles add to half the excess plus a full turn",
       regimes=CURVED, tol=1e-10)
def _c(f, rng, tol):
    s = sum(ci.akopyan_measure(f, i) for i in range(3))
    return abs(s - (0.5 * area(f, 0) + complex(0.0, 2 * math.pi)))


@claim("akopyan-bisection", "2.10.5", "each cevian of the equal-area point halves the excess",
       regimes=CURVED)
def _c(f, rng, tol):
    gh = center("equal_area_point", f)
    tr = cevian_triple(f, gh)
    e = f.vertex_bary
    worst = 0.0
    for i, (j, k) in enumerate(((1, 2), (2, 0), (0, 1))):
        h1 = area(subframe(f, e[i], e[j], tr[i]), 0)
        h2 = area(subframe(f, e[i], tr[i], e[k]), 0)
        worst = max(worst, abs(h1 - h2))
    return worst


@claim("akopyan-inscribed", "2.10.5", "the remeasured inscribed angle matches the circumcenter angle up to a right angle",
       regimes=CURVED)
def _c(f, rng, tol):
    from ..measure import angle_measure

    from ..measure import angle_measures

    o = center("circumcenter", f)
    mu_hat = ci.akopyan_measure(f, 2)
    mus = angle_measures(f.from_bary(o), f.from_bary(f.vertex_bary[0]),
                         f.from_bary(f.vertex_bary[1]), f.pol)
    val = mu_hat - complex(0.0, math.pi / 2)
    return min(min(abs(val - m.as_complex()), abs(val + m.as_complex()))
               for m in mus)


@claim("medial-orthoaxis", "2.10.3", "the orthoaxis of the medial triangle is the centroid-circumcenter join",
       regimes=CURVED)
def _c(f, rng, tol):
    med = cevian_triple(f, np.ones(3))
    sub = subframe(f, *med)
    ax = f.line_to_bary(sub.line_from_bary(orthoaxis(sub)))
    g = np.ones(3)
    o = center("circumcenter", f)
    worst = max(_incidence(ax, g), _incidence(ax, o))
    worst = max(worst, _incidence(ax, center("de_longchamps", f)))
    worst = max(worst, _incidence(ax, center("circumcenter_isogonal", f)))
    worst = max(worst, _incidence(ax, isoconjugate(
        f, evaluate(CENTERS["lemoine"], f), o)))
    return worst


# ==== 1.x kernel invariants (coverage helpers, measured at frame scale) ======


@claim("swap-law-isoconjugation", "1.4.14", "isotomic conjugation agrees with dual-frame isogonal conjugation",
       grade="OBSERVATION")
def _c(f, rng, tol):
    fd = dual_frame(f)
    q = _random_point(f, rng)
    it = isotomic(f, q)
    qd = fd.to_bary(f.from_bary(q))
    ig = isogonal(fd, qd)
    return _pt_gap(f.from_bary(it), fd.from_bary(ig))


def registry():
    return dict(REGISTRY)
