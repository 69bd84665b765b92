"""Cubic and quartic loci: pivotal isocubics, orthology, isoptics.

A pivotal isocubic pK(W, P) is the locus of points X collinear with the
pivot P and the W-isoconjugate of X; all the named cubics here arise this
way from catalog points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import fsolve

from .centers import CENTERS, center, evaluate
from .conics import Conic
from .errors import (
    IsotropicInput,
    NoIsogonicPoint,
    RegimeUnsupported,
    SidelineInput,
)
from .frame import (
    Frame,
    bary_join,
    bary_meet,
    cevian_triple,
    anticevian_triple,
    isoconjugate,
    isogonal,
    pedal_triple,
    perspector,
    realize,
    reflect,
    symmedian_point,
    tripolar,
)
from .measure import Measure
from .projective import proj_equal


@dataclass(frozen=True)
class TernaryCubic:
    """Homogeneous cubic in barycentric coordinates with pivotal metadata."""

    name: str
    pole: Optional[np.ndarray]
    pivot: Optional[np.ndarray]
    coeffs: np.ndarray  # 10 coefficients in lexicographic monomial order

    MONOMIALS = (
        (3, 0, 0), (0, 3, 0), (0, 0, 3),
        (2, 1, 0), (2, 0, 1), (1, 2, 0),
        (0, 2, 1), (1, 0, 2), (0, 1, 2),
        (1, 1, 1),
    )

    def eval(self, p) -> float:
        p = np.asarray(p, dtype=float)
        total = 0.0
        for c, (i, j, k) in zip(self.coeffs, self.MONOMIALS):
            total += c * p[0] ** i * p[1] ** j * p[2] ** k
        return float(total)

    def residual(self, p) -> float:
        p = np.asarray(p, dtype=float)
        n = np.linalg.norm(p)
        return abs(self.eval(p)) / (np.linalg.norm(self.coeffs) * n ** 3)

    def contains(self, p, tol: float = 1e-8) -> bool:
        return self.residual(p) < tol


def membership(p, cubic: TernaryCubic, tol: float = 1e-8):
    """(on-curve flag, normalized residual)."""
    r = cubic.residual(p)
    return r < tol, r


def pk_cubic(pole, pivot, name: str = "pK") -> TernaryCubic:
    """Pivotal isocubic: sum of P_j x_j (W_{j+1} x_{j+2}^2 - W_{j+2} x_{j+1}^2)."""
    w = np.asarray(pole, dtype=float)
    p = np.asarray(pivot, dtype=float)
    coeffs = np.zeros(10)

    def add(i, j, k, val):
        idx = TernaryCubic.MONOMIALS.index((i, j, k))
        coeffs[idx] += val

    # j = 0: p0 x0 (w1 x2^2 - w2 x1^2); cyclic.
    add(1, 0, 2, p[0] * w[1])
    add(1, 2, 0, -p[0] * w[2])
    add(2, 1, 0, p[1] * w[2])
    add(0, 1, 2, -p[1] * w[0])
    add(0, 2, 1, p[2] * w[0])
    add(2, 0, 1, -p[2] * w[1])
    return TernaryCubic(name=name, pole=w, pivot=p, coeffs=coeffs)


def cubic(kind: str, f: Frame) -> TernaryCubic:
    """Named cubics of the frame."""
    k = symmedian_point(f)
    if kind == "darboux":
        return pk_cubic(k, center("de_longchamps", f), "darboux")
    if kind == "lucas":
        x = f.d6
        pivot = np.array([x[3], x[4], x[5]])  # isotomic conjugate of H
        return pk_cubic(np.ones(3), pivot, "lucas")
    if kind == "thomson":
        return pk_cubic(k, center("double_point", f), "thomson")
    if kind == "neuberg":
        return pk_cubic(k, center("orthostar", f), "neuberg")
    if kind == "pk_w4_w5":
        return pk_cubic(center("w4_pole", f), center("w5_pivot", f), "pk_w4_w5")
    if kind == "pk_k_nplus":
        return pk_cubic(k, center("pseudo_ninepoint", f), "pk_k_nplus")
    raise ValueError(f"unknown cubic kind {kind!r}")


def sample_on_cubic(c: TernaryCubic, rng, n: int = 20):
    """On-curve points from random line sections (real roots polished)."""
    pts = []
    tries = 0
    while len(pts) < n and tries < 40 * n:
        tries += 1
        u = rng.normal(size=3)
        v = rng.normal(size=3)
        # restrict cubic to u + t v: quartic-free cubic in t
        ts = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
        vals = np.array([c.eval(u + t * v) for t in ts])
        poly = np.polyfit(ts, vals, 3)
        for r in np.roots(poly):
            if abs(r.imag) < 1e-10 * (1 + abs(r)):
                p = u + r.real * v
                if np.linalg.norm(p) > 1e-9 and c.residual(p) < 1e-10:
                    pts.append(p / np.linalg.norm(p))
                    if len(pts) >= n:
                        break
    return pts


def pivotal_law_residual(c: TernaryCubic, f: Frame, p) -> float:
    """Collinearity of P, its pole-isoconjugate and the pivot, plus membership."""
    q = isoconjugate(f, c.pole, p)
    line = bary_join(np.asarray(p, dtype=float), c.pivot)
    r1 = abs(float(line @ q)) / (np.linalg.norm(line) * np.linalg.norm(q))
    return max(r1, c.residual(q))


def circumconic_perspector_of_symmetry_point(f: Frame, z) -> np.ndarray:
    """Perspector of the circumconic having Z as a symmetry point.

    Solves M(p) z = mu C z for the circumconic matrix parameters, a
    homogeneous linear system in (p1, p2, p3, mu).
    """
    z = np.asarray(z, dtype=float)
    cz = f.Cmat @ z
    rows = np.array(
        [
            [0.0, z[2], z[1], -cz[0]],
            [z[2], 0.0, z[0], -cz[1]],
            [z[1], z[0], 0.0, -cz[2]],
        ]
    )
    _, _, vt = np.linalg.svd(rows)
    sol = vt[-1]
    return sol[:3]


def thomson_center_locus_test(f: Frame, z, tol: float = 1e-8) -> bool:
    """Whether Z is the symmetry point of a circumconic whose perspector
    lies on the perspector-variant cubic."""
    p = circumconic_perspector_of_symmetry_point(f, z)
    return cubic("thomson", f).residual(p) < tol


# -- orthology ---------------------------------------------------------------


def orthology(f: Frame, triple, tol: float = 1e-8):
    """Orthology centers (S, T) of a point triple against the frame, or None.

    S is the common point of the joins with the dual vertices; T the common
    point of the perpendiculars from the frame vertices to the triple's
    sides.
    """
    pts = [np.asarray(p, dtype=float) for p in triple]
    duals = [f.Dmat[i] for i in range(3)]
    lines = []
    for p, ap in zip(pts, duals):
        l = bary_join(p, ap)
        lines.append(l / np.linalg.norm(l))
    det = abs(float(np.linalg.det(np.array(lines))))
    if det > tol:
        return None
    s = bary_meet(lines[0], lines[1])
    # Reciprocal: perpendiculars from the vertices to the opposite sides.
    from .frame import bary_perp_line

    rlines = []
    for v, (i, j) in zip(f.vertex_bary, ((1, 2), (2, 0), (0, 1))):
        side = bary_join(pts[i], pts[j])
        l = bary_perp_line(f, side, v)
        rlines.append(l / np.linalg.norm(l))
    det2 = abs(float(np.linalg.det(np.array(rlines))))
    if det2 > max(tol, 1e-7):
        return None
    t = bary_meet(rlines[0], rlines[1])
    return s, t


# -- reflection triples and the Neuberg family --------------------------------


def reflection_triple(f: Frame, p):
    """Reflections of P in the three sidelines."""
    p = np.asarray(p, dtype=float)
    if abs(f.bary_form(p, p)) < 1e-10 * float(p @ p) * np.linalg.norm(f.Cmat):
        raise IsotropicInput("reflection triple of an isotropic point")
    out = []
    for i in range(3):
        mirror = f.Dmat[i]  # dual point of sideline i
        out.append(reflect(f, mirror, p))
    return tuple(out)


def _fit_cubic_from_evaluator(fn, name: str) -> TernaryCubic:
    """Exact cubic coefficients of a degree-3 evaluator by interpolation."""
    rng = np.random.default_rng(987654321)
    rows = []
    vals = []
    for _ in range(24):
        x = rng.normal(size=3)
        rows.append([x[0] ** i * x[1] ** j * x[2] ** k
                     for (i, j, k) in TernaryCubic.MONOMIALS])
        vals.append(fn(x))
    coeffs, _, _, _ = np.linalg.lstsq(np.array(rows), np.array(vals), rcond=None)
    return TernaryCubic(name=name, pole=None, pivot=None, coeffs=coeffs)


def reflection_collinearity_cubic(f: Frame) -> TernaryCubic:
    """Locus where the three sideline reflections of a point are collinear.

    The sideline reflections are fixed linear maps, so the determinant of
    the three images is an exact cubic form in the point.
    """
    mirrors = [f.Dmat[i] for i in range(3)]
    maps = []
    for m in mirrors:
        cm = f.Cmat @ m
        maps.append(np.eye(3) - 2.0 * np.outer(m, cm) / float(m @ cm))

    def det_of_reflections(x):
        return float(np.linalg.det(np.stack([mp @ x for mp in maps])))

    return _fit_cubic_from_evaluator(det_of_reflections, "reflection-collinearity")


def reflection_perspector(f: Frame, q, tol: float = 1e-8):
    """Perspector of the reflection triple of Q with the frame, or None."""
    return perspector(list(reflection_triple(f, q)), f.vertex_bary, tol)


def vertex_reflections(f: Frame):
    """A, B, C reflected in their opposite sidelines."""
    return tuple(reflect(f, f.Dmat[i], f.vertex_bary[i]) for i in range(3))


def neuberg_forward(f: Frame, q, tol: float = 1e-7):
    """Map of the self-isogonal reflection cubic into pK(W4, W5)."""
    return reflection_perspector(f, q, tol)


def neuberg_reverse(f: Frame, p, tol: float = 1e-7):
    """Map of pK(K, N+) into the reflection cubic via anticevian perspectivity."""
    anc = anticevian_triple(f, p)
    vr = vertex_reflections(f)
    return perspector(list(anc), list(vr), tol)


def cevian_quotient_perspector(f: Frame, p) -> np.ndarray:
    """Perspector of the anticevian and reflection triples of P."""
    p = np.asarray(p, dtype=float)
    d = f.d6
    x4, x5, x6 = d[3], d[4], d[5]
    return np.array(
        [
            p[0] * (-x4 * p[0] + x5 * p[1] + x6 * p[2]),
            p[1] * (x4 * p[0] - x5 * p[1] + x6 * p[2]),
            p[2] * (x4 * p[0] + x5 * p[1] - x6 * p[2]),
        ]
    )


def cevian_sideline_reflections(f: Frame, p):
    """Reflections of P in the sidelines of its own cevian triangle."""
    traces = cevian_triple(f, p)
    out = []
    for j, k in ((1, 2), (2, 0), (0, 1)):
        lam = bary_join(traces[j], traces[k])
        mirror = f.bary_dual_line(lam)
        out.append(reflect(f, mirror, p))
    return tuple(out)


def cevian_reflection_perspector(f: Frame, p) -> np.ndarray:
    """Perspector with the frame of P's reflections in its cevian sidelines."""
    p = np.asarray(p, dtype=float)
    d = f.Dmat
    out = []
    rows = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    for a, b, c_ in rows:
        out.append(
            p[a]
            * (
                p[a] ** 2 * (d[c_, c_] * p[b] ** 2 - 2 * d[b, c_] * p[b] * p[c_]
                             + d[b, b] * p[c_] ** 2)
                - d[a, a] * p[b] ** 2 * p[c_] ** 2
            )
        )
    return np.array(out)


# -- pseudoparallels ----------------------------------------------------------


def pseudoparallel_perspector(f: Frame, triple, q) -> np.ndarray:
    """Perspector of the meets of the joins R_k with the tripolar traces of Q."""
    q = np.asarray(q, dtype=float)
    if np.min(np.abs(q)) < 1e-13 * np.max(np.abs(q)):
        raise SidelineInput("anchor on a sideline")
    out = []
    for k, r in enumerate(triple):
        r = np.asarray(r, dtype=float)
        rt = r[0] / q[0] + r[1] / q[1] + r[2] / q[2]
        out.append(r[k] / rt)
    return np.array(out)


def pseudoparallel_tripolar_line(f: Frame, t) -> np.ndarray:
    """The carrier line of the three side meets: the tripolar of [t1:t2:t3]."""
    return tripolar(f, np.asarray(t, dtype=float))


def ceva_point(q, r) -> np.ndarray:
    """The Ceva point of two points."""
    q = np.asarray(q, dtype=float)
    r = np.asarray(r, dtype=float)
    return np.array(
        [
            1.0 / (r[1] * q[2] + r[2] * q[1]),
            1.0 / (r[2] * q[0] + r[0] * q[2]),
            1.0 / (r[0] * q[1] + r[1] * q[0]),
        ]
    )


# -- isoptics, thaloids, isogonic points --------------------------------------


def _cross_matrix(p):
    p = np.asarray(p, dtype=float)
    return np.array([[0.0, p[2], -p[1]], [-p[2], 0.0, p[0]], [p[1], -p[0], 0.0]])


def _pair_form(f: Frame, p, q) -> np.ndarray:
    """Symmetric matrix of x -> (x cross p) [D] (x cross q)."""
    cp = _cross_matrix(p)
    cq = _cross_matrix(q)
    m = cp.T @ f.Dmat @ cq
    return 0.5 * (m + m.T)


@dataclass(frozen=True)
class IsopticCurve:
    """Quartic locus of points seeing a segment under a fixed line distance."""

    p: np.ndarray
    q: np.ndarray
    mixed: np.ndarray   # matrix of (x cross p) [D] (x cross q)
    mp: np.ndarray      # matrix of (x cross p) [D] (x cross p)
    mq: np.ndarray      # matrix of (x cross q) [D] (x cross q)
    rhs: float          # cosh^2 of the reference line distance

    def eval(self, x) -> float:
        x = np.asarray(x, dtype=float)
        l = float(x @ self.mixed @ x)
        a = float(x @ self.mp @ x)
        b = float(x @ self.mq @ x)
        return l * l - self.rhs * a * b

    def residual(self, x) -> float:
        x = np.asarray(x, dtype=float)
        scale = (np.linalg.norm(self.mixed) ** 2
                 + abs(self.rhs) * np.linalg.norm(self.mp) * np.linalg.norm(self.mq))
        return abs(self.eval(x)) / (scale * float(x @ x) ** 2)


def isoptic(f: Frame, p, q, r) -> IsopticCurve:
    """Isoptic of the segment through P, Q seen from the reference point R."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    r = np.asarray(r, dtype=float)
    mixed = _pair_form(f, p, q)
    mp = _pair_form(f, p, p)
    mq = _pair_form(f, q, q)
    l = float(r @ mixed @ r)
    a = float(r @ mp @ r)
    b = float(r @ mq @ r)
    return IsopticCurve(p=p, q=q, mixed=mixed, mp=mp, mq=mq, rhs=l * l / (a * b))


def thaloid(f: Frame, p, q) -> Conic:
    """Right-angle isoptic: the conic (x cross p) [D] (x cross q) = 0."""
    return Conic(_pair_form(f, p, q))


def isogonic_points(f: Frame, tol: float = 1e-10):
    """Points whose three vertex lines are pairwise at distance pi/3 i.

    Newton search on the two cosh^2 conditions from symmetric seeds and
    Kiepert-style hints; solutions are validated against all three pairs.
    """
    e = f.vertex_bary
    pairs = ((0, 1), (1, 2), (2, 0))
    mats = {}
    for i, j in pairs:
        mats[(i, j)] = (
            _pair_form(f, e[i], e[j]),
            _pair_form(f, e[i], e[i]),
            _pair_form(f, e[j], e[j]),
        )

    def cond(x, i, j):
        mixed, mi, mj = mats[(i, j)]
        l = float(x @ mixed @ x)
        return l * l - 0.25 * float(x @ mi @ x) * float(x @ mj @ x)

    def residuals(v, anchor):
        x = _embed(v, anchor)
        return [cond(x, 0, 1), cond(x, 1, 2)]

    def _embed(v, anchor):
        x = np.array(anchor, dtype=float)
        x[idx[0]] = v[0]
        x[idx[1]] = v[1]
        return x

    sols = []
    g = np.ones(3)
    seeds = [g, center("incenter", f)]
    try:
        seeds.append(center("orthocenter", f))
    except Exception:
        pass
    for s0 in (0.5, 2.0, -0.5):
        seeds.append(np.array([1.0, s0, s0]))
        seeds.append(np.array([s0, 1.0, s0]))
        seeds.append(np.array([s0, s0, 1.0]))
    for seed in seeds:
        seed = np.asarray(seed, dtype=float)
        anchor_idx = int(np.argmax(np.abs(seed)))
        idx = [i for i in range(3) if i != anchor_idx]
        anchor = seed / seed[anchor_idx]
        try:
            sol, info, ier, _ = fsolve(
                lambda v: residuals(v, anchor), anchor[idx], full_output=True)
        except Exception:
            continue
        if ier != 1:
            continue
        x = _embed(sol, anchor)
        if max(abs(cond(x, i, j)) for i, j in pairs) > tol * np.linalg.norm(x) ** 4:
            continue
        # Validate the actual line distances.
        from .measure import line_distance

        ok = True
        for i, j in pairs:
            li = bary_join(x, e[i])
            lj = bary_join(x, e[j])
            d = line_distance(f.line_from_bary(li), f.line_from_bary(lj), f.pol)
            if not d.approx_eq(Measure(0.0, math.pi / 3), 1e-7):
                ok = False
                break
        if ok and all(not proj_equal(x, s, 1e-7) for s in sols):
            sols.append(x / np.linalg.norm(x))
    return sols


def distance_sum(f: Frame, x) -> float:
    """Sum of imaginary parts of the vertex distances (for Fermat checks)."""
    from .frame import bary_distance

    total = 0.0
    for v in f.vertex_bary:
        d = bary_distance(f, x, v)
        total += abs(d.im) + abs(d.re)
    return total
