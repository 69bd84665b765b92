"""Incidence-level projective plane over real homogeneous triples.

Points and lines are plain numpy arrays of shape (3,).  A point (p1:p2:p3)
and a line (l1:l2:l3)* are incident when the dot product vanishes.  The
metric enters only through :class:`Polarity`, the involutive correlation
x -> x^delta given by the diagonal form diag(rho, 1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DualDegeneracy,
    NotCollinear,
)

# Default tolerances for projective comparisons.  All residuals are
# normalized by operand norms, so these are unit-free.
EQ_TOL = 1e-9
ZERO_TOL = 1e-12


def canonical(v) -> np.ndarray:
    """Scale so the largest absolute component is 1, lexicographic sign positive.

    The sign convention makes the first component whose magnitude exceeds
    ZERO_TOL relative to the maximum positive; components below that band
    are treated as zero.
    """
    v = np.asarray(v, dtype=float)
    m = np.max(np.abs(v))
    if m == 0.0:
        raise ValueError("zero vector has no canonical form")
    w = v / m
    return w * lex_sign(w)


def lex_sign(v) -> float:
    """Sign of the first component that is not negligibly small (+1 if none)."""
    v = np.asarray(v, dtype=float)
    band = ZERO_TOL * np.max(np.abs(v))
    for x in v:
        if abs(x) > band:
            return 1.0 if x > 0 else -1.0
    return 1.0


def angular_distance(u, v) -> float:
    """Sine of the angle between the projective rays of u and v (sign-free)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    c = np.linalg.norm(np.cross(u, v))
    return c / (np.linalg.norm(u) * np.linalg.norm(v))


def proj_equal(u, v, tol: float = EQ_TOL) -> bool:
    """Projective equality, scale- and sign-insensitive."""
    return angular_distance(u, v) < tol


@dataclass(frozen=True)
class Polarity:
    """The metric polarity determined by the parameter rho (nonzero).

    rho > 0 gives the elliptic plane, rho < 0 the extended hyperbolic
    plane.  The associated bilinear form on points is diag(rho, 1, 1).
    """

    rho: float

    def __post_init__(self):
        if self.rho == 0:
            raise ValueError("rho must be nonzero")

    @property
    def form(self) -> np.ndarray:
        return np.diag([self.rho, 1.0, 1.0])

    def point_form(self, p, q) -> float:
        """Bilinear form rho*p1*q1 + p2*q2 + p3*q3 on point coordinates."""
        p = np.asarray(p, dtype=float)
        q = np.asarray(q, dtype=float)
        return self.rho * p[0] * q[0] + p[1] * q[1] + p[2] * q[2]

    def line_form(self, k, l) -> float:
        """Dual form k1*l1 + rho*k2*l2 + rho*k3*l3 on line coordinates."""
        k = np.asarray(k, dtype=float)
        l = np.asarray(l, dtype=float)
        return k[0] * l[0] + self.rho * (k[1] * l[1] + k[2] * l[2])

    def dual_point(self, p) -> np.ndarray:
        """Dual line of a point: (rho p1 : p2 : p3)*."""
        p = np.asarray(p, dtype=float)
        return np.array([self.rho * p[0], p[1], p[2]])

    def dual_line(self, l) -> np.ndarray:
        """Dual point of a line: (l1 : rho l2 : rho l3)."""
        l = np.asarray(l, dtype=float)
        return np.array([l[0], self.rho * l[1], self.rho * l[2]])


def dual(x, kind: str, pol: Polarity) -> np.ndarray:
    """Apply the polarity; ``kind`` is 'point' or 'line'."""
    if kind == "point":
        return pol.dual_point(x)
    if kind == "line":
        return pol.dual_line(x)
    raise ValueError(f"kind must be 'point' or 'line', got {kind!r}")


def join(p, q, tol: float = EQ_TOL) -> np.ndarray:
    """Line through two distinct points (cross product of representatives)."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if proj_equal(p, q, tol):
        raise CoincidentPoints("join of projectively equal points")
    return np.cross(p, q)


def meet(k, l, tol: float = EQ_TOL) -> np.ndarray:
    """Intersection point of two distinct lines."""
    k = np.asarray(k, dtype=float)
    l = np.asarray(l, dtype=float)
    if proj_equal(k, l, tol):
        raise CoincidentLines("meet of projectively equal lines")
    return np.cross(k, l)


def is_orthogonal(x, y, kind: str, pol: Polarity, tol: float = EQ_TOL) -> bool:
    """Orthogonality of two points or two lines under the polarity."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if kind == "points":
        val = pol.point_form(x, y)
    elif kind == "lines":
        val = pol.line_form(x, y)
    else:
        raise ValueError(f"kind must be 'points' or 'lines', got {kind!r}")
    return abs(val) < tol * np.linalg.norm(x) * np.linalg.norm(y)


def is_isotropic_point(p, pol: Polarity, band: float = 1e-10) -> bool:
    """Self-orthogonality test with a relative tolerance band."""
    p = np.asarray(p, dtype=float)
    return abs(pol.point_form(p, p)) < band * float(p @ p)


def is_isotropic_line(l, pol: Polarity, band: float = 1e-10) -> bool:
    l = np.asarray(l, dtype=float)
    return abs(pol.line_form(l, l)) < band * float(l @ l)


def perp_line(l, p, pol: Polarity, tol: float = EQ_TOL) -> np.ndarray:
    """Perpendicular from the point P to the line l: the join P v dual(l)."""
    ld = pol.dual_line(l)
    if proj_equal(ld, p, tol):
        raise DualDegeneracy("perpendicular from the pole of the line")
    return np.cross(p, ld)


def perp_point(p, l, pol: Polarity, tol: float = EQ_TOL) -> np.ndarray:
    """Point on l orthogonal to P: the meet l ^ dual(P)."""
    pd = pol.dual_point(p)
    if proj_equal(pd, l, tol):
        raise DualDegeneracy("perpendicular point for the polar of the point")
    return np.cross(l, pd)


def par(l, p, pol: Polarity) -> np.ndarray:
    """Line through P 'parallel' to l: perpendicular to perp(l, P) at P."""
    return perp_line(perp_line(l, p, pol), p, pol)


def ped(p, l, pol: Polarity) -> np.ndarray:
    """Pedal (orthogonal projection) of P on l."""
    return perp_point(perp_point(p, l, pol), l, pol)


def collinear(points, tol: float = EQ_TOL) -> bool:
    """True when all points lie on one line (normalized 3x3 determinant test)."""
    pts = [np.asarray(p, dtype=float) for p in points]
    pts = [p / np.linalg.norm(p) for p in pts]
    for i in range(len(pts) - 2):
        d = float(np.linalg.det(np.array([pts[i], pts[i + 1], pts[i + 2]])))
        if abs(d) > tol:
            return False
    return True


def line_coordinates(points, tol: float = EQ_TOL):
    """Coordinates (s_i, t_i) of collinear points in a common 2D basis.

    The basis is the most separated pair among the inputs; every point is
    expressed as s*u + t*v by least squares.
    """
    pts = [np.asarray(p, dtype=float) / np.linalg.norm(p) for p in points]
    best, bi, bj = -1.0, 0, 1
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            s = angular_distance(pts[i], pts[j])
            if s > best:
                best, bi, bj = s, i, j
    if best < tol:
        raise CoincidentPoints("all points coincide; no line basis")
    basis = np.stack([pts[bi], pts[bj]], axis=1)
    coords = []
    for p in pts:
        st, res, _, _ = np.linalg.lstsq(basis, p, rcond=None)
        resid = np.linalg.norm(basis @ st - p)
        if resid > 1e-7:
            raise NotCollinear(f"point off the common line (residual {resid:.2e})")
        coords.append(st)
    return coords


def cross_ratio(p1, p2, p3, p4, tol: float = EQ_TOL) -> float:
    """Cross ratio (p1, p2; p3, p4) of four collinear points.

    With the standard convention, the quadruple (P, Q, R, harmonic
    conjugate of R) evaluates to -1.
    """
    coords = line_coordinates([p1, p2, p3, p4], tol)

    def x(i, j):
        si, ti = coords[i]
        sj, tj = coords[j]
        return si * tj - sj * ti

    num = x(0, 2) * x(1, 3)
    den = x(0, 3) * x(1, 2)
    if den == 0.0:
        return np.inf if num != 0 else np.nan
    return num / den


def harmonic_range(p1, p2, p3, p4, tol: float = 1e-8) -> bool:
    """True when the four points taken in this order form a harmonic range.

    Consecutive-order convention: the 1st and 3rd points are separated
    harmonically by the 2nd and 4th.
    """
    return abs(cross_ratio(p1, p3, p2, p4) + 1.0) < tol


def harmonic_conjugate(p, q, r, tol: float = EQ_TOL) -> np.ndarray:
    """Fourth harmonic point D with cross_ratio(P, Q; R, D) = -1."""
    pts = [np.asarray(v, dtype=float) for v in (p, q, r)]
    if proj_equal(pts[0], pts[1], tol):
        raise CoincidentPoints("anchors of a harmonic conjugate coincide")
    # r = a*p + b*q in the (p, q) basis; conjugate is a*p - b*q.
    basis = np.stack([pts[0] / np.linalg.norm(pts[0]), pts[1] / np.linalg.norm(pts[1])], axis=1)
    ab, _, _, _ = np.linalg.lstsq(basis, pts[2] / np.linalg.norm(pts[2]), rcond=None)
    resid = np.linalg.norm(basis @ ab - pts[2] / np.linalg.norm(pts[2]))
    if resid > 1e-7:
        raise NotCollinear("harmonic conjugate of non-collinear points")
    a, b = ab
    if abs(a) < tol or abs(b) < tol:
        raise CoincidentPoints("harmonic conjugate undefined: R coincides with P or Q")
    return a * basis[:, 0] - b * basis[:, 1]


def incidence_residual(l, p) -> float:
    """|l . p| normalized by the operand norms."""
    l = np.asarray(l, dtype=float)
    p = np.asarray(p, dtype=float)
    return abs(float(l @ p)) / (np.linalg.norm(l) * np.linalg.norm(p))


def concurrent(lines, tol: float = EQ_TOL) -> bool:
    """True when all lines pass through one point (dual of collinear)."""
    return collinear(lines, tol)


def common_point(lines, tol: float = 1e-8):
    """Common point of concurrent lines, or None.

    Uses the most independent pair for the meet and checks the rest by
    incidence.
    """
    ls = [np.asarray(l, dtype=float) / np.linalg.norm(np.asarray(l, dtype=float)) for l in lines]
    best, bi, bj = -1.0, 0, 1
    for i in range(len(ls)):
        for j in range(i + 1, len(ls)):
            s = np.linalg.norm(np.cross(ls[i], ls[j]))
            if s > best:
                best, bi, bj = s, i, j
    if best < tol:
        return None
    x = np.cross(ls[bi], ls[bj])
    for l in ls:
        if incidence_residual(l, x) > tol:
            return None
    return x
