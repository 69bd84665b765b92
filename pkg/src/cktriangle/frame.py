"""Reference triples: characteristic matrix, barycentric machinery, mates.

A frame packages a triple of non-collinear anisotropic points A, B, C with
anisotropic sidelines, their normalized vectors, the Gram matrix ``C`` of
the metric form on those vectors and its inverse ``D``.  Barycentric
coordinates are taken with respect to the normalized vectors, so a point
[p1:p2:p3] is the projection of p1*A^o + p2*B^o + p3*C^o.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from .errors import (
    CollinearVertices,
    DegenerateFoot,
    DegenerateTriple,
    IsotropicInput,
    IsotropicMirror,
    IsotropicSideline,
    IsotropicVertex,
    VertexInput,
)
from .measure import (
    Measure,
    NormalizedPoint,
    PointClass,
    angle_measure,
    distance,
    normalize,
    segment_measures,
)
from .projective import Polarity, lex_sign, proj_equal


class Regime(Enum):
    ELLIPTIC = "elliptic"
    LOBACHEVSKY = "lobachevsky"
    DE_SITTER = "desitter"
    ANTI_DE_SITTER = "antidesitter"
    NON_CLASSICAL = "nonclassical"


CLASSICAL_REGIMES = (
    Regime.ELLIPTIC,
    Regime.LOBACHEVSKY,
    Regime.DE_SITTER,
    Regime.ANTI_DE_SITTER,
)


def _adjugate3(m: np.ndarray) -> np.ndarray:
    """Explicit adjugate of a symmetric 3x3 matrix."""
    a, b, c = m[0]
    _, d, e = m[1]
    f = m[2, 2]
    return np.array(
        [
            [d * f - e * e, c * e - b * f, b * e - c * d],
            [c * e - b * f, a * f - c * c, b * c - a * e],
            [b * e - c * d, b * c - a * e, a * d - b * b],
        ]
    )


@dataclass(frozen=True)
class Frame:
    pol: Polarity
    A: NormalizedPoint
    B: NormalizedPoint
    C: NormalizedPoint
    V: np.ndarray = field(repr=False)      # columns A^o, B^o, C^o
    Vinv: np.ndarray = field(repr=False)
    Cmat: np.ndarray = field(repr=False)   # Gram matrix of the vertex vectors
    Dmat: np.ndarray = field(repr=False)   # its inverse
    Cmat_hi: np.ndarray = field(repr=False, default=None)  # extended precision
    Dmat_hi: np.ndarray = field(repr=False, default=None)
    detC: float = 0.0

    @property
    def rho(self) -> float:
        return self.pol.rho

    @cached_property
    def eps2_vertices(self):
        return (self.A.eps2, self.B.eps2, self.C.eps2)

    @cached_property
    def eps2_sides(self):
        # Dual vertices have barycentric squares D[i, i].
        return tuple(1 if self.Dmat[i, i] > 0 else -1 for i in range(3))

    @property
    def classical_vertex(self) -> bool:
        e = self.eps2_vertices
        return e[0] == e[1] == e[2]

    @property
    def classical_side(self) -> bool:
        e = self.eps2_sides
        return e[0] == e[1] == e[2]

    @property
    def classical(self) -> bool:
        return self.classical_vertex and self.classical_side

    @cached_property
    def regime(self) -> Regime:
        if self.rho > 0:
            return Regime.ELLIPTIC
        if not self.classical:
            return Regime.NON_CLASSICAL
        ev, es = self.eps2_vertices[0], self.eps2_sides[0]
        if ev < 0 and es > 0:
            return Regime.LOBACHEVSKY
        if ev > 0 and es > 0:
            return Regime.DE_SITTER
        if ev > 0 and es < 0:
            return Regime.ANTI_DE_SITTER
        return Regime.NON_CLASSICAL

    # -- coordinates ----------------------------------------------------

    def to_bary(self, p) -> np.ndarray:
        return self.Vinv @ np.asarray(p, dtype=float)

    def from_bary(self, b) -> np.ndarray:
        return self.V @ np.asarray(b, dtype=float)

    def line_to_bary(self, l) -> np.ndarray:
        return self.V.T @ np.asarray(l, dtype=float)

    def line_from_bary(self, lam) -> np.ndarray:
        return self.Vinv.T @ np.asarray(lam, dtype=float)

    def bary_form(self, p, q) -> float:
        """The metric bilinear form in barycentric coordinates: p [C] q."""
        return float(np.asarray(p, dtype=float) @ self.Cmat @ np.asarray(q, dtype=float))

    def dual_form(self, k, l) -> float:
        """The dual form on barycentric line covectors: k [D] l."""
        return float(np.asarray(k, dtype=float) @ self.Dmat @ np.asarray(l, dtype=float))

    def bary_dual_point(self, p) -> np.ndarray:
        """Barycentric covector of the dual line of a point."""
        return self.Cmat @ np.asarray(p, dtype=float)

    def bary_dual_line(self, lam) -> np.ndarray:
        """Barycentric coordinates of the dual point of a line covector."""
        return self.Dmat @ np.asarray(lam, dtype=float)

    def classify_bary(self, p, band: float = 1e-10) -> PointClass:
        p = np.asarray(p, dtype=float)
        q = self.bary_form(p, p)
        if abs(q) < band * float(p @ p) * np.linalg.norm(self.Cmat):
            return PointClass.ISOTROPIC
        return PointClass.EXTERIOR if q > 0 else PointClass.INTERIOR

    # -- cached frame data ----------------------------------------------

    @cached_property
    def d6(self):
        d = self.Dmat
        return np.array([d[0, 0], d[1, 1], d[2, 2], d[1, 2], d[2, 0], d[0, 1]])

    @cached_property
    def c6(self):
        c = self.Cmat
        return np.array([c[0, 0], c[1, 1], c[2, 2], c[1, 2], c[2, 0], c[0, 1]])

    @cached_property
    def d6_hi(self):
        d = self.Dmat_hi if self.Dmat_hi is not None else self.Dmat
        return tuple(np.clongdouble(v) for v in
                     (d[0, 0], d[1, 1], d[2, 2], d[1, 2], d[2, 0], d[0, 1]))

    @cached_property
    def c6_hi(self):
        c = self.Cmat_hi if self.Cmat_hi is not None else self.Cmat
        return tuple(np.clongdouble(v) for v in
                     (c[0, 0], c[1, 1], c[2, 2], c[1, 2], c[2, 0], c[0, 1]))

    @cached_property
    def sides(self):
        """Branch-plus side measures (a, b, c) of the base triangle."""
        mu = lambda p, q: segment_measures(p, q, self.pol)[0]
        return (
            mu(self.B.vec, self.C.vec),
            mu(self.C.vec, self.A.vec),
            mu(self.A.vec, self.B.vec),
        )

    @cached_property
    def angles(self):
        """Inner angle measures (alpha, beta, gamma) of the base triangle."""
        return (
            angle_measure(self.B.vec, self.A.vec, self.C.vec, self.pol),
            angle_measure(self.C.vec, self.B.vec, self.A.vec, self.pol),
            angle_measure(self.A.vec, self.C.vec, self.B.vec, self.pol),
        )

    @cached_property
    def vertex_bary(self):
        return (np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), np.array([0, 0, 1.0]))

    @cached_property
    def sideline_bary(self):
        """Covectors of the sidelines a = B v C, b = C v A, c = A v B."""
        return (np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), np.array([0, 0, 1.0]))


def build_frame(a, b, c, pol: Polarity, band: float = 1e-10) -> Frame:
    """Construct a frame from three pairwise distinct points.

    The characteristic matrix pair is computed in extended precision: at
    large metric parameters the Gram matrix is nearly rank one and its
    adjugate cancels catastrophically in double precision.
    """
    pts = [np.asarray(v, dtype=float) for v in (a, b, c)]
    for i in range(3):
        if proj_equal(pts[i], pts[(i + 1) % 3]):
            raise CollinearVertices("coincident vertices")
    normed = []
    cols = []
    for v in pts:
        n = normalize(v, pol, band)
        if n.isotropic:
            raise IsotropicVertex("vertex on the absolute conic")
        normed.append(n)
        # Renormalize the representative in extended precision.
        w = np.asarray(v, dtype=np.longdouble)
        q = pol.rho * w[0] * w[0] + w[1] * w[1] + w[2] * w[2]
        w = w / np.sqrt(abs(q))
        cols.append(w * lex_sign(np.asarray(w, dtype=float)))
    VL = np.stack(cols, axis=1)
    V = np.asarray(VL, dtype=float)
    detL = (
        VL[0, 0] * (VL[1, 1] * VL[2, 2] - VL[1, 2] * VL[2, 1])
        - VL[0, 1] * (VL[1, 0] * VL[2, 2] - VL[1, 2] * VL[2, 0])
        + VL[0, 2] * (VL[1, 0] * VL[2, 1] - VL[1, 1] * VL[2, 0])
    )
    if abs(float(detL)) < 1e-12:
        raise CollinearVertices("vertices are collinear")
    SL = np.diag(np.array([pol.rho, 1.0, 1.0], dtype=np.longdouble))
    CL = VL.T @ SL @ VL
    detCL = np.longdouble(pol.rho) * detL * detL
    adjL = _adjugate3(CL)
    DL = adjL / detCL
    Cmat = np.asarray(CL, dtype=float)
    Dmat = np.asarray(DL, dtype=float)
    detC = float(detCL)
    # Sideline anisotropy: the dual vertex of sideline i has form value D[i,i].
    for i in range(3):
        if abs(Dmat[i, i]) < band * np.linalg.norm(Dmat):
            raise IsotropicSideline(f"sideline {i} is tangent to the absolute conic")
    Vinv = np.linalg.inv(V)
    return Frame(pol=pol, A=normed[0], B=normed[1], C=normed[2],
                 V=V, Vinv=Vinv, Cmat=Cmat, Dmat=Dmat,
                 Cmat_hi=CL, Dmat_hi=DL, detC=detC)


# -- barycentric-level metric -------------------------------------------


def bary_cosh2_distance(f: Frame, p, q) -> float:
    """cosh^2 of the distance from the quadratic-form quotient (signed)."""
    pq = f.bary_form(p, q)
    return pq * pq / (f.bary_form(p, p) * f.bary_form(q, q))


def bary_distance(f: Frame, p, q) -> Measure:
    """Distance reconstructed from cosh^2 d and the endpoint class signs."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if proj_equal(p, q):
        return Measure(0.0, 0.0)
    pp = f.bary_form(p, p)
    qq = f.bary_form(q, q)
    scale = np.linalg.norm(f.Cmat)
    p_iso = abs(pp) < 1e-10 * float(p @ p) * scale
    q_iso = abs(qq) < 1e-10 * float(q @ q) * scale
    if p_iso and q_iso:
        return Measure(-math.inf, math.pi / 2)
    if p_iso or q_iso:
        other = qq if p_iso else pp
        return Measure(-math.copysign(math.inf, other), math.pi / 4)
    h2 = bary_cosh2_distance(f, p, q)
    if h2 < 0:
        return Measure(-math.asinh(math.sqrt(-h2)), math.pi / 2)
    if h2 <= 1.0:
        return Measure(0.0, math.acos(math.sqrt(h2)))
    m = math.acosh(math.sqrt(h2))
    return Measure(m if pp < 0 else -m, 0.0)


def cosh_distance(f: Frame, p, q) -> complex:
    """Complex cosh of the reconstructed distance (finite cases only)."""
    return np.cosh(bary_distance(f, p, q).as_complex())


# -- classical triangle constructions ------------------------------------


def reflect(f: Frame, m, p) -> np.ndarray:
    """Reflection of P in the anisotropic point M, in barycentric coordinates."""
    m = np.asarray(m, dtype=float)
    p = np.asarray(p, dtype=float)
    mm = f.bary_form(m, m)
    if abs(mm) < 1e-10 * float(m @ m) * np.linalg.norm(f.Cmat):
        raise IsotropicMirror("mirror point on the absolute conic")
    return p - 2.0 * (f.bary_form(m, p) / mm) * m


def reflect_in_line(f: Frame, lam, p) -> np.ndarray:
    """Reflection of P in a line: the reflection in the line's dual point."""
    return reflect(f, f.bary_dual_line(lam), p)


def pedal_triple(f: Frame, p):
    """Feet of the perpendiculars from P to the three sidelines."""
    p = np.asarray(p, dtype=float)
    d = f.Dmat
    feet = (
        np.array([0.0, d[0, 0] * p[1] - d[0, 1] * p[0], d[0, 0] * p[2] - d[2, 0] * p[0]]),
        np.array([d[1, 1] * p[0] - d[0, 1] * p[1], 0.0, d[1, 1] * p[2] - d[1, 2] * p[1]]),
        np.array([d[2, 2] * p[0] - d[2, 0] * p[2], d[2, 2] * p[1] - d[1, 2] * p[2], 0.0]),
    )
    for foot in feet:
        if np.linalg.norm(foot) < 1e-13 * np.linalg.norm(d) * np.linalg.norm(p):
            raise DegenerateFoot("pedal foot degenerates")
    return feet


def antipedal_triple(f: Frame, p):
    """Vertices of the antipedal triple of P (meets of perpendiculars at A, B, C)."""
    a_f, b_f, c_f = pedal_triple(f, p)
    # Written with the pedal denominators: A^[P] = [-1 : u2/v2 : u3/v3] etc.
    d = f.Dmat
    p = np.asarray(p, dtype=float)
    u1 = d[0, 0] * p[1] - d[0, 1] * p[0]
    u2 = d[1, 1] * p[0] - d[0, 1] * p[1]
    u3 = d[0, 0] * p[2] - d[2, 0] * p[0]
    u4 = d[2, 2] * p[0] - d[2, 0] * p[2]
    u5 = d[1, 1] * p[2] - d[1, 2] * p[1]
    u6 = d[2, 2] * p[1] - d[1, 2] * p[2]
    for u in (u1, u2, u3, u4, u5, u6):
        if abs(u) < 1e-13 * np.linalg.norm(d) * np.linalg.norm(p):
            raise DegenerateFoot("antipedal denominator vanishes")
    A_ = np.array([-1.0, u2 / u1, u4 / u3])
    B_ = np.array([u1 / u2, -1.0, u6 / u5])
    C_ = np.array([u3 / u4, u5 / u6, -1.0])
    return A_, B_, C_


def cevian_triple(f: Frame, p):
    p = np.asarray(p, dtype=float)
    if _is_vertex(p):
        raise VertexInput("cevian triple of a vertex")
    return (
        np.array([0.0, p[1], p[2]]),
        np.array([p[0], 0.0, p[2]]),
        np.array([p[0], p[1], 0.0]),
    )


def anticevian_triple(f: Frame, p):
    p = np.asarray(p, dtype=float)
    if _is_vertex(p):
        raise VertexInput("anticevian triple of a vertex")
    return (
        np.array([-p[0], p[1], p[2]]),
        np.array([p[0], -p[1], p[2]]),
        np.array([p[0], p[1], -p[2]]),
    )


def _is_vertex(p, tol: float = 1e-12) -> bool:
    p = np.abs(np.asarray(p, dtype=float))
    m = p.max()
    return np.sum(p > tol * m) <= 1


def tripolar(f: Frame, p) -> np.ndarray:
    """Covector of the tripolar line p2 p3 x1 + p3 p1 x2 + p1 p2 x3 = 0."""
    p = np.asarray(p, dtype=float)
    if _is_vertex(p):
        raise VertexInput("tripolar of a vertex")
    return np.array([p[1] * p[2], p[2] * p[0], p[0] * p[1]])


def tripole(f: Frame, lam) -> np.ndarray:
    """Inverse of the tripolar map: [l2 l3 : l3 l1 : l1 l2]."""
    lam = np.asarray(lam, dtype=float)
    if _is_vertex(lam):
        raise VertexInput("tripole of a sideline")
    return np.array([lam[1] * lam[2], lam[2] * lam[0], lam[0] * lam[1]])


def isoconjugate(f: Frame, pole, q) -> np.ndarray:
    """P-isoconjugate of Q: [p1 q2 q3 : p2 q3 q1 : p3 q1 q2]."""
    pole = np.asarray(pole, dtype=float)
    q = np.asarray(q, dtype=float)
    if np.any(np.abs(pole) < 1e-13 * np.abs(pole).max()):
        raise VertexInput("isoconjugation pole on a sideline")
    if _is_vertex(q):
        raise VertexInput("isoconjugate of a vertex")
    return np.array([pole[0] * q[1] * q[2], pole[1] * q[2] * q[0], pole[2] * q[0] * q[1]])


def isotomic(f: Frame, q) -> np.ndarray:
    return isoconjugate(f, np.ones(3), q)


def symmedian_point(f: Frame) -> np.ndarray:
    d = f.Dmat
    return np.array([d[0, 0], d[1, 1], d[2, 2]])


def isogonal(f: Frame, q) -> np.ndarray:
    return isoconjugate(f, symmedian_point(f), q)


def star(f: Frame, p) -> np.ndarray:
    """Dual point of the tripolar of P: (p2 p3, p3 p1, p1 p2) D."""
    d = f.Dmat_hi if f.Dmat_hi is not None else f.Dmat
    lam = np.asarray(tripolar(f, p), dtype=np.longdouble)
    return np.asarray(d @ lam, dtype=float)


def dual_frame(f: Frame) -> Frame:
    """Frame of the dual triple (poles of the sidelines)."""
    verts = [f.from_bary(f.Dmat[i]) for i in range(3)]
    return build_frame(verts[0], verts[1], verts[2], f.pol)


def area(f: Frame, k: int = 0) -> complex:
    """Angle excess of triangle k of the frame (complex value)."""
    al, be, ga = (m.as_complex() for m in f.angles)
    pi_i = complex(0.0, math.pi)
    sums = {
        0: al + be + ga - pi_i,
        1: al - be - ga + pi_i,
        2: -al + be - ga + pi_i,
        3: -al - be + ga + pi_i,
    }
    return sums[k]


def perspector(t1, t2, tol: float = 1e-8):
    """Common point of the cross joins of two point triples, or None."""
    t1 = [np.asarray(p, dtype=float) for p in t1]
    t2 = [np.asarray(p, dtype=float) for p in t2]
    lines = []
    for p, q in zip(t1, t2):
        if proj_equal(p, q):
            raise DegenerateTriple("triples share a point; perspector undefined")
        l = np.cross(p, q)
        lines.append(l / np.linalg.norm(l))
    det = abs(float(np.linalg.det(np.array(lines))))
    if det > tol:
        return None
    best, bi, bj = -1.0, 0, 1
    for i in range(3):
        for j in range(i + 1, 3):
            s = np.linalg.norm(np.cross(lines[i], lines[j]))
            if s > best:
                best, bi, bj = s, i, j
    if best < 1e-12:
        raise DegenerateTriple("all cross joins coincide")
    x = np.cross(lines[bi], lines[bj])
    return x


def perspectivity_residual(t1, t2) -> float:
    """Normalized concurrency determinant of the three cross joins."""
    lines = []
    for p, q in zip(t1, t2):
        l = np.cross(np.asarray(p, dtype=float), np.asarray(q, dtype=float))
        lines.append(l / np.linalg.norm(l))
    return abs(float(np.linalg.det(np.array(lines))))


# -- barycentric incidence helpers ----------------------------------------


def bary_join(p, q) -> np.ndarray:
    return np.cross(np.asarray(p, dtype=float), np.asarray(q, dtype=float))


def bary_meet(k, l) -> np.ndarray:
    return np.cross(np.asarray(k, dtype=float), np.asarray(l, dtype=float))


def bary_perp_line(f: Frame, lam, p) -> np.ndarray:
    """Line through P perpendicular to the line lam (join with its dual point)."""
    return np.cross(np.asarray(p, dtype=float), f.bary_dual_line(lam))


def bary_perp_point(f: Frame, p, lam) -> np.ndarray:
    """Point on lam orthogonal to P (meet with the dual line of P)."""
    return np.cross(np.asarray(lam, dtype=float), f.bary_dual_point(p))


def bary_ped(f: Frame, p, lam) -> np.ndarray:
    """Pedal of P on the line lam."""
    return bary_perp_point(f, bary_perp_point(f, p, lam), lam)


def bary_par(f: Frame, lam, p) -> np.ndarray:
    """Line through P orthogonal to the perpendicular from P to lam."""
    return bary_perp_line(f, bary_perp_line(f, lam, p), p)


def bary_reflect_line(f: Frame, mirror_lam, lam) -> np.ndarray:
    """Image of a line under the reflection in the line ``mirror_lam``."""
    m = f.bary_dual_line(mirror_lam)
    pts = []
    k = int(np.argmax(np.abs(lam)))
    for i in range(3):
        if i == k:
            continue
        e = np.zeros(3)
        e[i] = 1.0
        e[k] = -lam[i] / lam[k]
        pts.append(reflect(f, m, e))
    return np.cross(pts[0], pts[1])


# -- center functions and mates -------------------------------------------


@dataclass(frozen=True)
class CenterFunction:
    """Bisymmetric homogeneous function of the six D-matrix arguments.

    ``eval`` maps (x1, ..., x6) = (d11, d22, d33, d23, d31, d12) to one
    coordinate; the other two come from cyclic rotation of the arguments.
    """

    eval: callable
    name: str = ""

    def check_bisymmetric(self, args) -> bool:
        x1, x2, x3, x4, x5, x6 = args
        a = self.eval(x1, x2, x3, x4, x5, x6)
        b = self.eval(x1, x3, x2, x4, x6, x5)
        return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def _rotations(d6):
    x1, x2, x3, x4, x5, x6 = d6
    return (
        (x1, x2, x3, x4, x5, x6),
        (x2, x3, x1, x5, x6, x4),
        (x3, x1, x2, x6, x4, x5),
    )


def evaluate_center(cf: CenterFunction, d6) -> np.ndarray:
    """Coordinates [f(rot0) : f(rot1) : f(rot2)] for the base triangle."""
    vals = [cf.eval(*rot) for rot in _rotations(d6)]
    return realize(np.array(vals, dtype=complex))


def mates(cf: CenterFunction, f: Frame):
    """The center of the base triangle and its three companion mates.

    Mate k evaluates the function on the sign-conjugated matrix F D F
    (F flips the k-th basis vector) and negates the k-th coordinate.
    """
    out = [evaluate_center(cf, f.d6)]
    d = f.Dmat
    for k in range(3):
        flip = np.ones(3)
        flip[k] = -1.0
        dk = (d * flip).T * flip  # F D F
        d6k = np.array([dk[0, 0], dk[1, 1], dk[2, 2], dk[1, 2], dk[2, 0], dk[0, 1]])
        vals = np.array([cf.eval(*rot) for rot in _rotations(d6k)], dtype=complex)
        vals[k] = -vals[k]
        out.append(realize(vals))
    return tuple(out)


def realize(vals: np.ndarray, tol: float = 1e-7) -> np.ndarray:
    """Turn a complex multiple of a real triple into the real triple."""
    vals = np.asarray(vals, dtype=complex)
    k = int(np.argmax(np.abs(vals)))
    if np.abs(vals[k]) == 0.0:
        raise ValueError("zero vector cannot be realized")
    w = vals / vals[k]
    if np.max(np.abs(w.imag)) > tol:
        raise ValueError(f"triple is not a complex multiple of a real one: {vals}")
    return w.real
