"""Catalog of named triangle centers with closed-form barycentrics.

Each entry evaluates on a frame, either through a bisymmetric function of
the six entries of the inverse characteristic matrix (and, where needed,
of the characteristic matrix itself), through an angle- or side-based
form, or through an explicit construction.  Euclidean limit indices refer
to the Encyclopedia of Triangle Centers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import RegimeUnsupported, UndefinedAtFrame, VertexInput
from .frame import (
    CenterFunction,
    Frame,
    Regime,
    bary_join,
    bary_meet,
    bary_ped,
    bary_perp_line,
    bary_perp_point,
    build_frame,
    cevian_triple,
    isoconjugate,
    isogonal,
    mates as frame_mates,
    perspector,
    realize,
    star,
    symmedian_point,
    tripolar,
    tripole,
)

csqrt = np.emath.sqrt


def _det_d(x):
    x1, x2, x3, x4, x5, x6 = x
    return (
        x1 * x2 * x3
        + 2 * x4 * x5 * x6
        - x1 * x4 * x4
        - x2 * x5 * x5
        - x3 * x6 * x6
    )


@dataclass(frozen=True)
class Center:
    """A catalog entry.

    ``f6`` maps the rotated six-argument tuples (inverse matrix, matrix)
    to one barycentric coordinate; ``angle_form``/``side_form`` map the
    rotated angle/side cosh-sinh data; ``construct`` builds the point
    directly on a frame.  Exactly one evaluator is authoritative, in the
    order f6, angle_form, side_form, construct.
    """

    id: str
    description: str = ""
    f6: Optional[Callable] = None
    angle_form: Optional[Callable] = None
    side_form: Optional[Callable] = None
    construct: Optional[Callable] = None
    etc: Optional[int] = None
    etc_label: str = ""
    absolute: bool = False
    classical_only: bool = False

    def has_formula(self) -> bool:
        return self.f6 is not None or self.angle_form is not None or self.side_form is not None


def _rot6(v):
    x1, x2, x3, x4, x5, x6 = v
    return (
        (x1, x2, x3, x4, x5, x6),
        (x2, x3, x1, x5, x6, x4),
        (x3, x1, x2, x6, x4, x5),
    )


def _rot3(v):
    a, b, c = v
    return ((a, b, c), (b, c, a), (c, a, b))


def _eval_f6(fn, d6, c6) -> np.ndarray:
    vals = [fn(x, y) for x, y in zip(_rot6(d6), _rot6(c6))]
    return np.array(vals, dtype=complex)


def _angle_data(f: Frame):
    return tuple(m.as_complex() for m in f.angles)


def _side_data(f: Frame):
    return tuple(m.as_complex() for m in f.sides)


def evaluate(center: Center, f: Frame, k: int = 0) -> np.ndarray:
    """Barycentric coordinates of a catalog center on a frame.

    ``k`` selects the base triangle (0) or one of its three mates, which
    is only supported for six-argument forms.
    """
    if center.classical_only and f.regime is Regime.NON_CLASSICAL:
        raise RegimeUnsupported(f"{center.id} needs a classical frame")
    if center.f6 is not None:
        if k == 0:
            vals = _eval_f6(center.f6, f.d6_hi, f.c6_hi)
        else:
            vals = _mate_eval(center.f6, f, k)
        return _realize_nonzero(vals, center.id)
    if k != 0:
        raise RegimeUnsupported(f"mates of {center.id} need a six-argument form")
    if center.angle_form is not None:
        vals = np.array([center.angle_form(*rot) for rot in _rot3(_angle_data(f))])
        return _realize_nonzero(vals, center.id)
    if center.side_form is not None:
        vals = np.array([center.side_form(*rot) for rot in _rot3(_side_data(f))])
        return _realize_nonzero(vals, center.id)
    if center.construct is not None:
        return center.construct(f)
    raise ValueError(f"center {center.id} has no evaluator")


def _mate_eval(fn, f: Frame, k: int) -> np.ndarray:
    flip = np.ones(3, dtype=np.longdouble)
    flip[k - 1] = -1.0
    dm = f.Dmat_hi if f.Dmat_hi is not None else np.asarray(f.Dmat, dtype=np.longdouble)
    cm = f.Cmat_hi if f.Cmat_hi is not None else np.asarray(f.Cmat, dtype=np.longdouble)
    dk = (dm * flip).T * flip
    ck = (cm * flip).T * flip
    d6 = tuple(np.clongdouble(v) for v in
               (dk[0, 0], dk[1, 1], dk[2, 2], dk[1, 2], dk[2, 0], dk[0, 1]))
    c6 = tuple(np.clongdouble(v) for v in
               (ck[0, 0], ck[1, 1], ck[2, 2], ck[1, 2], ck[2, 0], ck[0, 1]))
    vals = _eval_f6(fn, d6, c6)
    vals[k - 1] = -vals[k - 1]
    return vals


def _realize_nonzero(vals, cid: str) -> np.ndarray:
    vals = np.asarray(vals, dtype=complex)  # downcast after hi-precision eval
    scale = np.max(np.abs(vals))
    if not np.isfinite(scale) or scale == 0.0:
        raise UndefinedAtFrame(f"{cid} evaluates to a zero or infinite vector")
    out = realize(vals)
    if np.max(np.abs(out)) < 1e-13:
        raise UndefinedAtFrame(f"{cid} evaluates to the zero vector")
    return out


def center_mates(center: Center, f: Frame):
    """The center and its three mates (six-argument forms only)."""
    return tuple(evaluate(center, f, k) for k in range(4))


# -- constructions used by catalog entries ---------------------------------


def subframe(f: Frame, p, q, r) -> Frame:
    """Frame on three barycentric points of ``f`` (same polarity)."""
    return build_frame(f.from_bary(p), f.from_bary(q), f.from_bary(r), f.pol)


def subframe_point(f: Frame, sub: Frame, bary) -> np.ndarray:
    """Express a point of a subframe in the coordinates of ``f``."""
    return f.to_bary(sub.from_bary(bary))


def four_triangle(center: Center, center2: Center, f: Frame, tol: float = 1e-8):
    """Perspector of the triangulation centers, or None.

    Builds the three triangles (B T C), (C T A), (A T B) on the first
    center T, takes the second center in each, and tests the triple
    against the reference triple.
    """
    t = evaluate(center, f)
    e1, e2, e3 = f.vertex_bary
    tris = ((e2, t, e3), (e3, t, e1), (e1, t, e2))
    pts = []
    for tri in tris:
        sub = subframe(f, *tri)
        pts.append(subframe_point(f, sub, evaluate(center2, sub)))
    return perspector(pts, f.vertex_bary, tol)


def orthoaxis(f: Frame) -> np.ndarray:
    """Central line through the orthocenter and the orthostar."""
    x1, x2, x3, x4, x5, x6 = f.d6
    lam = np.array(
        [
            x4 * (x2 * x5 * x5 - x3 * x6 * x6),
            x5 * (x3 * x6 * x6 - x1 * x4 * x4),
            x6 * (x1 * x4 * x4 - x2 * x5 * x5),
        ]
    )
    if np.max(np.abs(lam)) < 1e-14 * np.max(np.abs(f.d6)) ** 3:
        raise UndefinedAtFrame("orthoaxis degenerates on this frame")
    return lam


def orthotransversal(f: Frame, p) -> np.ndarray:
    """Line carrying the three sideline meets of the perpendiculars at P."""
    p = np.asarray(p, dtype=float)
    if np.sum(np.abs(p) > 1e-12 * np.abs(p).max()) <= 1:
        raise VertexInput("orthotransversal of a vertex")
    x = f.d6
    lam = []
    for (x1, x2, x3, x4, x5, x6), (p1, p2, p3) in zip(_rot6(x), _rot3(p)):
        lam.append(1.0 / (p1 * (x4 * p1 - x5 * p2 - x6 * p3) + x1 * p2 * p3))
    return np.array(lam)


def orthocorrespondent(f: Frame, p) -> np.ndarray:
    return tripole(f, orthotransversal(f, p))


def hofstadter_point(f: Frame, k: float) -> np.ndarray:
    """Hofstadter point for the parameter k (k = 1/2 gives the incenter)."""
    al, be, ga = _angle_data(f)
    u = csqrt(f.d6[0]), csqrt(f.d6[1]), csqrt(f.d6[2])
    vals = []
    for ang, root in zip((al, be, ga), u):
        denom = np.sinh((1 - k) * ang)
        if k == 0:
            ratio = ang / np.sinh(ang)
        elif k == 1:
            ratio = np.sinh(ang) / ang
        else:
            ratio = np.sinh(k * ang) / denom
        vals.append(ratio * root)
    return _realize_nonzero(np.array(vals), f"hofstadter({k})")


def kiepert_apices(f: Frame, x: float, y: float, z: float):
    """Apex triple of the angle-pair lemma for parameters (x, y, z)."""
    r = [csqrt(f.d6[i]) for i in range(3)]
    p1 = realize(np.array([y * z * r[0], y * r[1], z * r[2]]))
    p2 = realize(np.array([x * r[0], z * x * r[1], z * r[2]]))
    p3 = realize(np.array([x * r[0], y * r[1], x * y * r[2]]))
    return p1, p2, p3


def _kiepert_base_angles(f: Frame, x: float, y: float, z: float):
    from .measure import angle_measure

    p1, p2, p3 = (f.from_bary(p) for p in kiepert_apices(f, x, y, z))
    a, b, c = (f.from_bary(v) for v in f.vertex_bary)
    g1 = angle_measure(p1, b, c, f.pol).im
    h1 = angle_measure(p1, c, b, f.pol).im
    g2 = angle_measure(p2, c, a, f.pol).im
    h2 = angle_measure(p2, a, c, f.pol).im
    return g1, h1, g2, h2


def kiepert_point(f: Frame, x: float) -> np.ndarray:
    """Kiepert perspector: apex perspector of equal-base-angle isosceles triples.

    The parameters y(x), z(x) making all six base angles equal are found
    by a two-dimensional Newton iteration.
    """
    from scipy.optimize import fsolve

    d = f.Dmat
    r = [csqrt(f.d6[i]) for i in range(3)]

    def residual(v):
        g1, h1, g2, h2 = _kiepert_base_angles(f, x, v[0], v[1])
        return [g1 - h1, g2 - h2]

    seeds = [
        ((r[0] * r[2] / (r[1] * r[2] + x * (d[2, 0] - d[1, 2]))).real,
         (r[0] * r[1] / (r[1] * r[2] + x * (d[0, 1] - d[1, 2]))).real),
        (x, x),
        (1.0, 1.0),
        (-x, -x),
    ]
    for u in (0.25, 0.6, 1.6, -0.5, -1.2):
        for v in (0.25, 0.6, 1.6, -0.5, -1.2):
            seeds.append((u, v))
    for seed in seeds:
        try:
            sol, info, ier, _ = fsolve(residual, seed, full_output=True)
        except Exception:
            continue
        if ier == 1 and max(abs(v) for v in residual(sol)) < 1e-10:
            y, z = float(sol[0]), float(sol[1])
            vals = np.array([x * r[0], y * r[1], z * r[2]])
            return _realize_nonzero(vals, f"kiepert({x})")
    raise UndefinedAtFrame(f"no equal-base-angle apices found for x = {x}")


def kiepert_conic(f: Frame):
    """Circumconic carrying the Kiepert perspectors (through G and H)."""
    from .conics import circumconic

    x = f.d6
    return circumconic(f, np.array([x[4] - x[5], x[5] - x[3], x[3] - x[4]]))


def _lemoine_point_bary(f: Frame) -> np.ndarray:
    y = f.c6
    return realize(np.array([y[3] - y[0], y[4] - y[1], y[5] - y[2]], dtype=complex))


def _x99_construct(f: Frame) -> np.ndarray:
    g_plus = realize(_eval_f6(lambda x, y: x[0] * x[3] - x[4] * x[5], f.d6, f.c6))
    lam = bary_join(_lemoine_point_bary(f), g_plus)
    return tripole(f, lam)


def _x110_construct(f: Frame) -> np.ndarray:
    o = star(f, np.ones(3))
    lam = bary_join(o, symmedian_point(f))
    return tripole(f, lam)


def _circum_isogonal_construct(f: Frame) -> np.ndarray:
    return isogonal(f, star(f, np.ones(3)))


def _w11_construct(f: Frame) -> np.ndarray:
    n_plus = realize(_eval_f6(lambda x, y: x[0] * x[3] - 2 * x[4] * x[5], f.d6, f.c6))
    return isogonal(f, n_plus)


def _x40_second_construct(f: Frame) -> np.ndarray:
    lines = []
    for k in range(2):
        o = evaluate(CENTERS["circumcenter"], f, k)
        i = evaluate(CENTERS["incenter"], f, k)
        lines.append(bary_join(o, i))
    return bary_meet(lines[0], lines[1])


def _clawson_construct(f: Frame) -> np.ndarray:
    from .circles import extangents_triple
    from .frame import pedal_triple

    h = realize(_eval_f6(lambda x, y: x[4] * x[5], f.d6, f.c6))
    orthic = pedal_triple(f, h)
    tri = extangents_triple(f)
    p = perspector(list(tri), list(orthic))
    if p is None:
        raise UndefinedAtFrame("extangents and orthic triples not perspective")
    return p


def _antipedal_orthic_construct(f: Frame) -> np.ndarray:
    from .frame import antipedal_triple, pedal_triple

    o_plus = realize(_eval_f6(lambda x, y: x[0] * x[3], f.d6, f.c6))
    h = realize(_eval_f6(lambda x, y: x[4] * x[5], f.d6, f.c6))
    anti = antipedal_triple(f, o_plus)
    orthic = pedal_triple(f, h)
    p = perspector(anti, orthic)
    if p is None:
        raise UndefinedAtFrame("antipedal and orthic triples not perspective")
    return p


# -- the catalog ------------------------------------------------------------


def _catalog() -> dict:
    entries = [
        Center("centroid", "unit barycentrics",
               f6=lambda x, y: 1.0, etc=2),
        Center("orthocenter", "perspector of the characteristic quadric",
               f6=lambda x, y: x[4] * x[5], etc=4, absolute=True),
        Center("double_point", "perspector of the antipedal triple of the orthocenter",
               f6=lambda x, y: x[0] * x[3] - x[4] * x[5], etc=2, absolute=True),
        Center("pseudo_circumcenter", "perspector of the dual of the midpoint-reflection triple",
               f6=lambda x, y: x[0] * x[3], etc=3, absolute=True),
        Center("de_longchamps", "perspector of the double triangle and the dual triple",
               f6=lambda x, y: x[0] * x[3] + x[4] * x[5], etc=20, absolute=True),
        Center("orthostar", "dual of the tripolar of the orthocenter",
               f6=lambda x, y: x[0] * x[3] + 2 * x[4] * x[5], etc=None,
               etc_label="X30", absolute=True),
        Center("pseudo_ninepoint", "meet of the four orthoaxes of the orthocentric system",
               f6=lambda x, y: x[0] * x[3] - 2 * x[4] * x[5], etc=5, absolute=True),
        Center("x24_point", "perspector of the twice-iterated orthic triple",
               f6=lambda x, y: x[4] * x[5] * (
                   x[0] * x[3] ** 2 - x[1] * x[4] ** 2 - x[2] * x[5] ** 2
                   + 2 * x[3] * x[4] * x[5]),
               etc=24, absolute=True),
        Center("symmedian", "isogonal conjugate of the centroid",
               f6=lambda x, y: x[0], etc=6),
        Center("circumcenter", "star of the centroid",
               f6=lambda x, y: x[0] + x[4] + x[5], etc=3),
        Center("incenter", "center of the inscribed circle",
               f6=lambda x, y: csqrt(x[0]), etc=1, classical_only=True),
        Center("lemoine", "perspector of the circumcircle",
               f6=lambda x, y: y[3] - y[0], etc=6, classical_only=True),
        Center("lemoine_conjugate", "isogonal conjugate of the circumcircle perspector",
               f6=lambda x, y: y[3] + y[0], etc=2, classical_only=True),
        Center("gergonne", "perspector of the incircle",
               f6=lambda x, y: csqrt(x[1]) * csqrt(x[2]) + x[3], etc=7,
               classical_only=True),
        Center("nagel", "isotomic conjugate of the incircle perspector",
               f6=lambda x, y: csqrt(x[1]) * csqrt(x[2]) - x[3], etc=8,
               classical_only=True),
        Center("bevan", "perspector of the excenter triple and the dual triple",
               f6=lambda x, y: csqrt(x[0]) * (
                   csqrt(x[0]) * csqrt(x[1]) * csqrt(x[2]) - csqrt(x[0]) * x[3]
                   + csqrt(x[1]) * x[4] + csqrt(x[2]) * x[5]),
               angle_form=lambda a, b, c: np.sinh(a) * (
                   1 + np.cosh(a) - np.cosh(b) - np.cosh(c)),
               etc=40, classical_only=True),
        Center("x40_second", "common point of the circumcenter-incenter joins",
               construct=_x40_second_construct, etc=40, classical_only=True),
        Center("mittenpunkt", "perspector of the medial and excenter triples",
               f6=lambda x, y: csqrt(x[0]) * (-csqrt(x[0]) + csqrt(x[1]) + csqrt(x[2])),
               angle_form=lambda a, b, c: np.sinh(a) * (
                   -np.sinh(a) + np.sinh(b) + np.sinh(c)),
               etc=9, classical_only=True),
        Center("spieker", "radical center of the excircles",
               side_form=_spieker_side_form, etc=10, classical_only=True),
        Center("schiffler", "perspector of the excenter-circumcenter meets",
               angle_form=lambda a, b, c: np.sinh(a) / (np.cosh(b) + np.cosh(c)),
               etc=21, classical_only=True),
        Center("x65_point", "perspector of the extangents triple",
               angle_form=lambda a, b, c: np.sinh(a) * (np.cosh(b) + np.cosh(c)),
               etc=65, classical_only=True),
        Center("x46_point", "perspector of the excenter and orthic triples",
               f6=lambda x, y: csqrt(x[0]) * (
                   -x[3] * csqrt(x[0]) + x[4] * csqrt(x[1]) + x[5] * csqrt(x[2])),
               angle_form=lambda a, b, c: np.sinh(a) * (
                   np.cosh(a) - np.cosh(b) - np.cosh(c)),
               etc=46, classical_only=True),
        Center("x57_point", "perspector of the incenter pedal and excenter triples",
               f6=lambda x, y: csqrt(x[0]) * (
                   -x[3] * csqrt(x[0]) + x[4] * csqrt(x[1]) + x[5] * csqrt(x[2])
                   - csqrt(x[0]) * csqrt(x[1]) * csqrt(x[2])),
               angle_form=lambda a, b, c: np.sinh(a) * (
                   np.cosh(a) - np.cosh(b) - np.cosh(c) - 1),
               etc=57, classical_only=True),
        Center("kosnita", "perspector of the circumcenter triangulation",
               construct=lambda f: _four_triangle_construct(f, "circumcenter"),
               etc=54, classical_only=True),
        Center("de_villiers", "perspector of the incenter triangulation",
               angle_form=lambda a, b, c: np.sinh(a) / (2 * np.cosh(a / 2) + 1),
               etc=1127, classical_only=True),
        Center("clawson", "perspector of the extangents and orthic triples",
               construct=_clawson_construct, etc=19, classical_only=True),
        Center("hart_center", "center of the circle tangent to the in- and excircles",
               angle_form=lambda a, b, c: np.sinh(a) * np.cosh(b - c),
               etc=5, classical_only=True),
        Center("equal_area_point", "cevian point dividing the area in equal parts",
               side_form=lambda a, b, c: np.cosh(a / 2) / (
                   np.cosh(a / 2) + np.cosh(b / 2) * np.cosh(c / 2)),
               etc=2, classical_only=True),
        Center("pseudo_orthocenter", "second trace point on the tangent circle",
               side_form=lambda a, b, c: np.cosh(a / 2) / (
                   np.cosh(a / 2) - np.cosh(b / 2) * np.cosh(c / 2)),
               etc=4, classical_only=True),
        Center("isodynamic_plus", "first common point of the apollonian circles",
               f6=lambda x, y: (y[3] - y[0]) * (
                   y[0] + y[3] - y[4] - y[5]
                   + csqrt(np.abs(1.0 / _det_d(x)) / 3.0)),
               etc=15, classical_only=True),
        Center("isodynamic_minus", "second common point of the apollonian circles",
               f6=lambda x, y: (y[3] - y[0]) * (
                   y[0] + y[3] - y[4] - y[5]
                   - csqrt(np.abs(1.0 / _det_d(x)) / 3.0)),
               etc=16, classical_only=True),
        Center("circumcenter_isogonal", "isogonal conjugate of the circumcenter",
               construct=_circum_isogonal_construct, etc=4, classical_only=True),
        Center("evans", "perspector of the excenter and vertex-reflection triples",
               angle_form=lambda a, b, c: np.sinh(a) * (
                   1 + 2 * (np.cosh(a) - np.cosh(b) - np.cosh(c))),
               etc=484, classical_only=True),
        Center("neuberg_w2", "self-conjugate point of the reflection cubic",
               angle_form=lambda a, b, c: np.sinh(a) * (
                   4 * np.cosh(a) * (np.cosh(a) ** 2 - np.cosh(b) ** 2 - np.cosh(c) ** 2)
                   - np.cosh(a) + 4 * np.cosh(b) * np.cosh(c)),
               etc=399, classical_only=True),
        Center("neuberg_w3", "reflection-cubic point aligned with the dual ninepoint",
               angle_form=lambda a, b, c: np.sinh(a) * (
                   4 * (np.cosh(a) ** 2 - np.cosh(b) ** 2 - np.cosh(c) ** 2) + 1)
               / (np.cosh(a) + 2 * np.cosh(b) * np.cosh(c)),
               etc=1157, classical_only=True),
        Center("w4_pole", "pole of the reflection-perspectivity cubic",
               angle_form=lambda a, b, c: np.sinh(a) ** 2 / (1 - 4 * np.cosh(a) ** 2),
               etc=1989, classical_only=True),
        Center("w5_pivot", "pivot of the reflection-perspectivity cubic",
               angle_form=lambda a, b, c: np.sinh(a) * np.cosh(a)
               / (1 - 4 * np.cosh(a) ** 2),
               etc=265, classical_only=True),
        Center("w6_point", "image of the incenter under the reflection-cubic map",
               angle_form=lambda a, b, c: np.sinh(a) / (1 + 2 * np.cosh(a)),
               etc=79, classical_only=True),
        Center("w7_point", "image of the Evans perspector under the reflection-cubic map",
               angle_form=lambda a, b, c: np.sinh(a) / (1 - 2 * np.cosh(a)),
               etc=80, classical_only=True),
        Center("w8_point", "image of the third Neuberg point under the reflection-cubic map",
               angle_form=lambda a, b, c: np.sinh(a) / (
                   (1 - 4 * np.cosh(a) ** 2)
                   * (np.cosh(a) + 2 * np.cosh(b) * np.cosh(c))),
               etc=1141, classical_only=True),
        Center("w9_point", "anticevian-perspectivity cubic point mapping to the pseudo-circumcenter",
               angle_form=lambda a, b, c: np.sinh(a) * (
                   4 * np.cosh(a) * (np.cosh(a) ** 2 - np.cosh(b) ** 2 - np.cosh(c) ** 2)
                   - np.cosh(a) - 4 * np.cosh(b) * np.cosh(c)),
               etc=195, classical_only=True),
        Center("w10_point", "anticevian-perspectivity cubic point mapping to the incenter",
               angle_form=lambda a, b, c: np.sinh(a) * (
                   1 + 2 * (-np.cosh(a) + np.cosh(b) + np.cosh(c))),
               etc=3336, classical_only=True),
        Center("w11_point", "isogonal conjugate of the orthoaxes meet",
               construct=_w11_construct, etc=None, classical_only=True),
        Center("x52_point", "perspector of the doubled orthic pedal traces",
               f6=lambda x, y: x[4] * x[5]
               * (x[4] ** 2 * x[1] - 2 * x[4] * x[5] * x[3] + x[5] ** 2 * x[2])
               * (2 * x[0] * x[3] ** 2 + x[4] ** 2 * x[1]
                  - 4 * x[4] * x[5] * x[3] + x[5] ** 2 * x[2]),
               etc=52, absolute=True),
        Center("x389_point", "perspector of the corner orthocenters and the orthic triple",
               f6=lambda x, y: x[0] * (
                   x[3] * (x[1] * x[4] ** 2 + x[2] * x[5] ** 2)
                   - x[1] * x[2] * x[4] * x[5]),
               etc=389, absolute=True),
        Center("x100_point", "perspector of the paired incenter-mittenpunkt meets",
               angle_form=lambda a, b, c: np.sinh(a) / (np.sinh(b) - np.sinh(c)),
               etc=100, classical_only=True),
        Center("x100_second", "circumcircle point from the circumcenter-antipedal meets",
               f6=lambda x, y: 1.0 / (csqrt(x[1]) * (y[0] - y[5])
                                      - csqrt(x[2]) * (y[0] - y[4])),
               etc=100, classical_only=True),
        Center("x99_point", "tripole of the, join of the circle perspectors",
               construct=_x99_construct, etc=99, classical_only=True),
        Center("x110_point", "tripole of the circumcenter-symmedian join",
               construct=_x110_construct, etc=110, classical_only=True),
        Center("x1498_point", "pedal companion of the reflected orthocenter pivot",
               f6=lambda x, y: x[0] * (
                   2 * x[1] * x[2] * x[4] * x[5]
                   + x[3] * (-x[0] * x[3] ** 2 + x[1] * x[4] ** 2
                             + x[2] * x[5] ** 2 + x[0] * x[1] * x[2])),
               etc=1498, absolute=True),
        Center("x12_point", "perspector of the tangent-circle touch triple",
               angle_form=lambda a, b, c: np.sinh(a) * np.cosh((b - c) / 2) ** 2,
               etc=12, classical_only=True),
        Center("feuerbach_touch", "touchpoint of the incircle with the tangent circle",
               angle_form=lambda a, b, c: np.sinh(a) * np.sinh((b - c) / 2) ** 2,
               etc=11, classical_only=True),
        Center("antipedal_orthic_perspector",
               "perspector of the pseudo-circumcenter antipedal and orthic triples",
               construct=_antipedal_orthic_construct,
               etc=None, etc_label="X52-family"),
    ]
    return {c.id: c for c in entries}


def kosnita_formula(f: Frame, sign: float = 1.0) -> np.ndarray:
    """Closed form of the circumcenter-triangulation perspector.

    The square-root branch flips with the triangle shape, so the sign is
    a parameter; the construction picks the realized one.
    """
    x = f.d6_hi
    y = f.c6_hi
    lam = csqrt(abs(x[0] + x[1] + x[2] + 2 * (x[3] + x[4] + x[5])))
    rots = ((0, 1, 2, 3, 4, 5), (1, 2, 0, 4, 5, 3), (2, 0, 1, 5, 3, 4))
    vals = []
    for (i1, i2, i3, i4, i5, i6) in rots:
        x1, x2, x3, x4, x5, x6 = (x[i1], x[i2], x[i3], x[i4], x[i5], x[i6])
        vals.append(1.0 / ((x6 + x2) * (x5 + x3)
                           - x4 * (x1 + x4 + x5 + x6 - sign * y[i1] * lam)))
    return _realize_nonzero(np.array(vals, dtype=complex), "kosnita-formula")


def _four_triangle_construct(f: Frame, cid: str) -> np.ndarray:
    got = four_triangle(CENTERS[cid], CENTERS[cid], f)
    if got is None:
        raise UndefinedAtFrame(f"{cid} triangulation is not perspective here")
    return got


def _spieker_side_form(a, b, c):
    s1, s2, s3 = np.sinh(a), np.sinh(b), np.sinh(c)
    c1, c2, c3 = np.cosh(a), np.cosh(b), np.cosh(c)
    return (
        (s1 + s2 + s3) * (s1 * c2 * c3 + s2 * c3 * c1 + s3 * c1 * c2 + s1 * s2 * s3)
        + (s2 * c3 + s3 * c2) * (s2 + s3 - 2 * s1)
        + s1 * (2 * s2 + 2 * s3 - s1)
    )


CENTERS = _catalog()


def center(cid: str, f: Frame, k: int = 0) -> np.ndarray:
    """Evaluate a catalog center by id."""
    return evaluate(CENTERS[cid], f, k)


def catalog_records():
    """Machine-readable catalog export."""
    out = []
    for c in CENTERS.values():
        out.append(
            {
                "id": c.id,
                "description": c.description,
                "etc_limit": (f"X{c.etc}" if c.etc else c.etc_label or None),
                "classical_only": c.classical_only,
                "absolute": c.absolute,
                "evaluator": (
                    "six-argument" if c.f6 is not None
                    else "angles" if c.angle_form is not None
                    else "sides" if c.side_form is not None
                    else "construction"
                ),
            }
        )
    return out
