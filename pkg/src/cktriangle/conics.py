"""Conics in barycentric coordinates: poles, polars, circles, inconics.

A conic is a real symmetric 3x3 matrix acting on barycentric triples.
Circles are conics admitting a full line of symmetry points; their center
is the dual point of that line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import (
    DegenerateConic,
    DiagonalMatrix,
    NotOnConic,
    RadiusOutOfRange,
    SidelinePerspector,
)
from .frame import Frame, bary_distance, perspector as triple_perspector
from .measure import Measure, measure_min
from .projective import proj_equal


def _normalize_matrix(m: np.ndarray) -> np.ndarray:
    """Frobenius-normalized, sign fixed by the first non-negligible entry."""
    m = np.asarray(m, dtype=float)
    n = np.linalg.norm(m)
    if n == 0:
        raise DegenerateConic("zero conic matrix")
    w = m / n
    flat = w.reshape(-1)
    for x in flat:
        if abs(x) > 1e-13:
            return w if x > 0 else -w
    return w


def matrices_proportional(a, b, tol: float = 1e-10) -> bool:
    a = np.asarray(a, dtype=float).reshape(-1)
    b = np.asarray(b, dtype=float).reshape(-1)
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return min(np.max(np.abs(a - b)), np.max(np.abs(a + b))) < tol


class CircleKind(Enum):
    NONDEGENERATE = "nondegenerate"
    DOUBLE_LINE = "double-line"
    DOUBLE_POINT = "double-point"
    ISOTROPIC_LINE_PAIR = "isotropic-line-pair"


@dataclass(frozen=True)
class CircleInfo:
    center: np.ndarray
    radius: Measure
    kind: CircleKind


@dataclass(frozen=True)
class Conic:
    M: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "M", _normalize_matrix(self.M))

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.M))

    @property
    def degenerate(self) -> bool:
        return abs(self.det) < 1e-12

    def eval(self, x) -> float:
        x = np.asarray(x, dtype=float)
        return float(x @ self.M @ x)

    def residual(self, x) -> float:
        """Scale-normalized evaluation residual."""
        x = np.asarray(x, dtype=float)
        return abs(self.eval(x)) / float(x @ x)

    def on_conic(self, x, tol: float = 1e-8) -> bool:
        return self.residual(x) < tol

    def polar(self, p) -> np.ndarray:
        return self.M @ np.asarray(p, dtype=float)

    def pole(self, lam) -> np.ndarray:
        if self.degenerate:
            raise DegenerateConic("pole needs a nondegenerate conic")
        return self.adjoint() @ np.asarray(lam, dtype=float)

    def adjoint(self) -> np.ndarray:
        m = self.M
        return np.array(
            [
                [m[1, 1] * m[2, 2] - m[1, 2] ** 2,
                 m[1, 2] * m[2, 0] - m[0, 1] * m[2, 2],
                 m[0, 1] * m[1, 2] - m[2, 0] * m[1, 1]],
                [m[1, 2] * m[2, 0] - m[0, 1] * m[2, 2],
                 m[2, 2] * m[0, 0] - m[2, 0] ** 2,
                 m[2, 0] * m[0, 1] - m[1, 2] * m[0, 0]],
                [m[0, 1] * m[1, 2] - m[2, 0] * m[1, 1],
                 m[2, 0] * m[0, 1] - m[1, 2] * m[0, 0],
                 m[0, 0] * m[1, 1] - m[0, 1] ** 2],
            ]
        )

    def tangent_at(self, p, tol: float = 1e-7) -> np.ndarray:
        if not self.on_conic(p, tol):
            raise NotOnConic("tangent requested off the conic")
        return self.polar(p)


def absolute_conic(f: Frame) -> Conic:
    return Conic(f.Cmat)


def conic_perspector(c: Conic, tol: float = 1e-12) -> np.ndarray:
    """Perspector of the conic with respect to the reference triple."""
    m = c.M
    off = np.array([m[1, 2], m[2, 0], m[0, 1]])
    if np.max(np.abs(off)) < tol * np.linalg.norm(m):
        raise DiagonalMatrix("perspector undefined for a diagonal conic matrix")
    d1 = m[0, 0] * m[1, 2] - m[2, 0] * m[0, 1]
    d2 = m[1, 1] * m[2, 0] - m[0, 1] * m[1, 2]
    d3 = m[2, 2] * m[0, 1] - m[1, 2] * m[2, 0]
    return np.array([d2 * d3, d3 * d1, d1 * d2])


def dual_conic(c: Conic, f: Frame) -> Conic:
    """Conic of the dual points of the tangents: C M^# C."""
    if c.degenerate:
        raise DegenerateConic("dual of a degenerate conic")
    return Conic(f.Cmat @ c.adjoint() @ f.Cmat)


def adjoint_conic(c: Conic) -> Conic:
    return Conic(c.adjoint())


def conic_line_intersections(c: Conic, lam, real_only: bool = True):
    """Intersection points of a conic with a line (0, 1 or 2 points)."""
    lam = np.asarray(lam, dtype=float)
    # Build two points spanning the line.
    k = int(np.argmax(np.abs(lam)))
    e = [np.zeros(3), np.zeros(3)]
    idx = [i for i in range(3) if i != k]
    for j, i in enumerate(idx):
        e[j][i] = 1.0
        e[j][k] = -lam[i] / lam[k]
    u, v = e
    a = float(u @ c.M @ u)
    b = float(u @ c.M @ v)
    d = float(v @ c.M @ v)
    # Quadratic a + 2 b t + d t^2 along u + t v, plus the point v (t = inf).
    sols = []
    if abs(d) < 1e-14 * np.linalg.norm(c.M):
        sols.append(v)
        if abs(b) > 1e-14:
            sols.append(u - (a / (2 * b)) * v)
    else:
        disc = b * b - a * d
        if disc >= 0:
            r = math.sqrt(disc)
            for t in ((-b + r) / d, (-b - r) / d):
                sols.append(u + t * v)
        elif not real_only:
            r = complex(0.0, math.sqrt(-disc))
            for t in ((-b + r) / d, (-b - r) / d):
                sols.append(u + t * v)
    return sols


def line_tangency_residual(c: Conic, lam) -> float:
    """Normalized discriminant of the conic restricted to a line."""
    lam = np.asarray(lam, dtype=float)
    k = int(np.argmax(np.abs(lam)))
    e = [np.zeros(3), np.zeros(3)]
    idx = [i for i in range(3) if i != k]
    for j, i in enumerate(idx):
        e[j][i] = 1.0
        e[j][k] = -lam[i] / lam[k]
    u, v = e
    a = float(u @ c.M @ u)
    b = float(u @ c.M @ v)
    d = float(v @ c.M @ v)
    scale = max(abs(a), abs(b), abs(d))
    if scale == 0.0:
        return 0.0
    return abs(b * b - a * d) / (scale * scale)


def circle_info(c: Conic, f: Frame, tol: float = 1e-8) -> Optional[CircleInfo]:
    """Detect whether the conic is a circle; return center/radius/kind.

    A circle has a full line of symmetry points, i.e. the pencil map
    D M has a repeated eigenvalue with a two-dimensional real eigenspace;
    the center is the remaining simple eigenvector.
    """
    if matrices_proportional(c.M, f.Cmat, 1e-12):
        return None  # the absolute conic is excluded by convention
    if c.degenerate:
        return _degenerate_circle(c, f, tol)
    w = f.Dmat @ c.M
    evals, vecs = np.linalg.eig(w)
    if np.max(np.abs(evals.imag)) > 1e-8 * np.max(np.abs(evals)):
        return None
    evals = evals.real
    vecs = vecs.real
    scale = np.max(np.abs(evals))
    # Find the pairing with two (nearly) equal eigenvalues.
    pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
    best = None
    for i, j, k in pairs:
        gap = abs(evals[i] - evals[j])
        if best is None or gap < best[0]:
            best = (gap, k)
    gap, k = best
    if gap > tol * scale:
        return None
    center = vecs[:, k]
    # Alignment check: the polar of the center must be its dual line.
    pol_line = c.M @ center
    dual_line = f.Cmat @ center
    cr = np.linalg.norm(np.cross(pol_line, dual_line))
    if cr > tol * np.linalg.norm(pol_line) * np.linalg.norm(dual_line):
        return None
    radius = _circle_radius(c, f, center)
    if radius is None:
        return None
    return CircleInfo(center=center, radius=radius, kind=CircleKind.NONDEGENERATE)


def _degenerate_circle(c: Conic, f: Frame, tol: float) -> Optional[CircleInfo]:
    evals = np.linalg.eigvalsh(c.M)
    rank = int(np.sum(np.abs(evals) > 1e-9 * np.max(np.abs(evals))))
    if rank == 1:
        # Double line u u^T: center is the dual point of the line.
        idx = int(np.argmax(np.abs(np.diag(c.M))))
        lam = c.M[idx] / math.sqrt(abs(c.M[idx, idx]))
        center = f.bary_dual_line(lam)
        return CircleInfo(center=center, radius=Measure(0.0, math.pi / 2),
                          kind=CircleKind.DOUBLE_LINE)
    if rank == 2:
        # Pair of lines; as a circle only when both are isotropic, meeting
        # at the adjoint's kernel point with radius 0.
        adj = c.adjoint()
        k = int(np.argmax(np.abs(np.diag(adj))))
        center = adj[k]
        lines = _split_line_pair(c)
        if lines is None:
            return None
        kind = CircleKind.ISOTROPIC_LINE_PAIR
        for l in lines:
            if abs(f.dual_form(l, l)) > tol * np.linalg.norm(f.Dmat) * float(l @ l):
                return None
        return CircleInfo(center=center, radius=Measure(0.0, 0.0), kind=kind)
    return None


def _split_line_pair(c: Conic):
    """Split a rank-2 conic into its two real lines (None if complex)."""
    adj = c.adjoint()
    k = int(np.argmax(np.abs(np.diag(adj))))
    if adj[k, k] > 0:
        return None  # complex line pair
    p = adj[k] / math.sqrt(-adj[k, k])
    # M + skew(p) has rank 1; its rows/columns factor the pair.
    sk = np.array([[0.0, p[2], -p[1]], [-p[2], 0.0, p[0]], [p[1], -p[0], 0.0]])
    m = c.M + sk
    i, j = np.unravel_index(int(np.argmax(np.abs(m))), m.shape)
    return m[i], m[:, j]


def _circle_radius(c: Conic, f: Frame, center) -> Optional[Measure]:
    """Distance from the center to a sampled anisotropic conic point."""
    center = np.asarray(center, dtype=float)
    rng = np.random.default_rng(12345)
    for _ in range(24):
        lam = np.cross(center, rng.normal(size=3))
        if np.linalg.norm(lam) < 1e-12:
            continue
        pts = conic_line_intersections(c, lam)
        for p in pts:
            pp = f.bary_form(p, p)
            if abs(pp) > 1e-9 * float(p @ p) * np.linalg.norm(f.Cmat):
                return bary_distance(f, center, p)
    return None


def circle_about(f: Frame, m, p) -> Conic:
    """The unique circle with center M through P (0 < d(M,P) < pi/2 i)."""
    m = np.asarray(m, dtype=float)
    p = np.asarray(p, dtype=float)
    mp = f.bary_form(m, p)
    scale = math.sqrt(abs(f.bary_form(m, m) * f.bary_form(p, p)))
    if abs(mp) < 1e-12 * scale:
        raise RadiusOutOfRange("d(M, P) is a right angle")
    d = bary_distance(f, m, p)
    if not (Measure(0.0, 0.0).precedes(d) and d.precedes(Measure(0.0, math.pi / 2))):
        raise RadiusOutOfRange(f"d(M, P) = {d} outside (0, pi/2 i)")
    cm = f.Cmat @ m
    mp = f.bary_form(m, p)
    pp = f.bary_form(p, p)
    mat = (mp * mp) * f.Cmat - pp * np.outer(cm, cm)
    conic = Conic(mat)
    object.__setattr__(conic, "_circle_center", m.copy())
    return conic


def circle_with_cosh2_radius(f: Frame, m, k: float) -> Conic:
    """Circle about M with prescribed cosh^2 of the radius."""
    m = np.asarray(m, dtype=float)
    cm = f.Cmat @ m
    mat = k * f.bary_form(m, m) * f.Cmat - np.outer(cm, cm)
    return Conic(mat)


def twin_circle(c: Conic, f: Frame, center=None) -> Conic:
    """The twin: same center, cosh^2(r') = -cosh^2(r).

    Circles about M form the pencil of C and (C m)(C m)^T; the twin flips
    the C-component.
    """
    if center is None:
        info = circle_info(c, f)
        if info is None:
            raise DegenerateConic("twin of a non-circle")
        center = info.center
    m = np.asarray(center, dtype=float)
    cm = f.Cmat @ m
    b1 = f.Cmat.reshape(-1)
    b2 = np.outer(cm, cm).reshape(-1)
    basis = np.stack([b1, b2], axis=1)
    ab, _, _, _ = np.linalg.lstsq(basis, c.M.reshape(-1), rcond=None)
    a, b = float(ab[0]), float(ab[1])
    return Conic((-a) * f.Cmat + b * np.outer(cm, cm))


def circumconic(f: Frame, p) -> Conic:
    """Circumconic with perspector P: p1 x2 x3 + p2 x3 x1 + p3 x1 x2 = 0."""
    p = np.asarray(p, dtype=float)
    if np.min(np.abs(p)) < 1e-13 * np.max(np.abs(p)):
        raise SidelinePerspector("circumconic perspector on a sideline")
    m = np.zeros((3, 3))
    m[1, 2] = m[2, 1] = p[0]
    m[2, 0] = m[0, 2] = p[1]
    m[0, 1] = m[1, 0] = p[2]
    return Conic(m)


def bicevian_conic(f: Frame, p, q) -> Conic:
    """Conic through the six traces of P and Q."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    for v in (p, q):
        if np.min(np.abs(v)) < 1e-13 * np.max(np.abs(v)):
            raise SidelinePerspector("bicevian anchor on a sideline")
    m = np.zeros((3, 3))
    for i in range(3):
        m[i, i] = -2.0 / (p[i] * q[i])
        for j in range(i + 1, 3):
            m[i, j] = m[j, i] = 1.0 / (p[i] * q[j]) + 1.0 / (p[j] * q[i])
    return Conic(m)


def inconic(f: Frame, p) -> Conic:
    """Inconic with perspector P (tangent to all three sidelines)."""
    return bicevian_conic(f, p, p)


def conic_through(points) -> Conic:
    """Least-squares conic through five (or more) points."""
    rows = []
    for p in points:
        x, y, z = np.asarray(p, dtype=float) / np.linalg.norm(p)
        rows.append([x * x, y * y, z * z, 2 * y * z, 2 * z * x, 2 * x * y])
    _, _, vt = np.linalg.svd(np.array(rows))
    c = vt[-1]
    m = np.array(
        [
            [c[0], c[5], c[4]],
            [c[5], c[1], c[3]],
            [c[4], c[3], c[2]],
        ]
    )
    return Conic(m)


def concyclicity_residual(points, f: Frame, tol: float = 1e-8):
    """Smallest singular value of the conic fit plus a circle check.

    Returns (residual, circle_info or None); the residual is the smallest
    normalized singular value of the design matrix of all the points.
    """
    rows = []
    for p in points:
        x, y, z = np.asarray(p, dtype=float) / np.linalg.norm(p)
        rows.append([x * x, y * y, z * z, 2 * y * z, 2 * z * x, 2 * x * y])
    a = np.array(rows)
    svals = np.linalg.svd(a, compute_uv=False)
    resid = svals[-1] / svals[0]
    c = conic_through(points)
    return resid, circle_info(c, f, tol=max(tol, 1e-7))


def tangency_residual(c1: Conic, c2: Conic) -> float:
    """Normalized discriminant of det(M1 + t M2): zero at tangency."""
    m1, m2 = c1.M, c2.M

    def detmix(t):
        return np.linalg.det(m1 + t * m2)

    # Cubic coefficients by interpolation at 4 nodes.
    ts = np.array([-2.0, -1.0, 1.0, 2.0])
    vals = np.array([detmix(t) for t in ts])
    coeffs = np.polyfit(ts, vals, 3)
    a, b, c3, d = coeffs
    disc = (
        18 * a * b * c3 * d
        - 4 * b ** 3 * d
        + b ** 2 * c3 ** 2
        - 4 * a * c3 ** 3
        - 27 * a ** 2 * d ** 2
    )
    scale = np.max(np.abs(coeffs))
    if scale == 0:
        return 0.0
    return abs(disc) / scale ** 4


def conics_tangent(c1: Conic, c2: Conic, tol: float = 1e-7) -> bool:
    return tangency_residual(c1, c2) < tol


def conic_conic_intersections(c1: Conic, c2: Conic, tol: float = 1e-9):
    """Real intersection points of two conics via a degenerate pencil member."""
    m1, m2 = c1.M, c2.M
    ts = np.array([-2.0, -1.0, 1.0, 2.0])
    vals = np.array([np.linalg.det(m1 + t * m2) for t in ts])
    coeffs = np.polyfit(ts, vals, 3)
    roots = np.roots(coeffs)
    pts = []
    for r in roots:
        if abs(r.imag) > 1e-9 * (1 + abs(r)):
            continue
        mm = m1 + r.real * m2
        if np.linalg.norm(mm) == 0.0:
            continue
        dm = Conic(mm)
        lines = _split_line_pair(dm)
        if lines is None:
            evals = np.linalg.eigvalsh(dm.M)
            rank = int(np.sum(np.abs(evals) > 1e-8 * np.max(np.abs(evals))))
            if rank != 1:
                continue  # complex line pair; try another pencil member
            idx = int(np.argmax(np.abs(np.diag(dm.M))))
            lines = (dm.M[idx],)
        for lam in lines:
            if np.linalg.norm(lam) < 1e-12:
                continue
            for p in conic_line_intersections(c1, lam):
                if all(not proj_equal(p, q, 1e-7) for q in pts):
                    if c1.residual(p) < 1e-6 and c2.residual(p) < 1e-6:
                        pts.append(p)
        if pts:
            break
    return pts


def common_tangents(c1: Conic, c2: Conic, f: Frame):
    """Common tangent lines of two conics (duals of the dual-conic meets)."""
    d1 = dual_conic(c1, f)
    d2 = dual_conic(c2, f)
    pts = conic_conic_intersections(d1, d2)
    return [f.Cmat @ p for p in pts]


def fourth_intersection(c1: Conic, c2: Conic, known, tol: float = 1e-7):
    """The intersection of two conics distinct from three known common points."""
    pts = conic_conic_intersections(c1, c2)
    for p in pts:
        if all(not proj_equal(p, q, tol) for q in known):
            return p
    return None


def circle_center(c: Conic, f: Frame):
    cached = getattr(c, "_circle_center", None)
    if cached is not None:
        return cached
    info = circle_info(c, f)
    return None if info is None else info.center
