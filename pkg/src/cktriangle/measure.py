"""Complex-valued segment and angle measures on the metric projective plane.

A measure is a value a + b*i with a in the extended reals and b in [0, pi].
Segments come in two branches: with lexicographically sign-fixed
representatives p*, q* of the endpoints, the '+' branch of the segment
[P, Q] is the image of the nonnegative cone {s p* + t q* : s, t >= 0} and
the '-' branch is the complementary one.  Branch measures of a segment with
anisotropic endpoints always add up to pi*i.

The distance d(P, Q) selects the smaller branch measure under the total
order that compares imaginary parts first, then real parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    CoincidentPoints,
    CollinearVertex,
    IsotropicInput,
    NearIsotropic,
    NotOnLine,
)
from .projective import Polarity, lex_sign, meet, proj_equal

ISO_BAND = 1e-10  # relative band for the isotropy classification
PI = math.pi


class PointClass(Enum):
    EXTERIOR = 1
    INTERIOR = -1
    ISOTROPIC = 0


@dataclass(frozen=True)
class Measure:
    """Extended-complex measure value: re may be +-inf, im is real."""

    re: float
    im: float

    def __repr__(self):
        return f"Measure({self.re!r}, {self.im!r})"

    @property
    def finite(self) -> bool:
        return math.isfinite(self.re)

    def as_complex(self) -> complex:
        if not self.finite:
            raise ValueError("infinite measure has no complex value")
        return complex(self.re, self.im)

    def precedes(self, other: "Measure") -> bool:
        """Total order: compare imaginary parts first, then real parts."""
        if self.im != other.im:
            return self.im < other.im
        return self.re < other.re

    def approx_eq(self, other: "Measure", tol: float = 1e-9) -> bool:
        """Exact on infinite parts, absolute tolerance on finite ones."""
        if math.isinf(self.re) or math.isinf(other.re):
            return self.re == other.re and abs(self.im - other.im) < tol
        return abs(self.re - other.re) < tol and abs(self.im - other.im) < tol

    def __neg__(self) -> "Measure":
        return Measure(-self.re, -self.im)

    def __add__(self, other) -> "Measure":
        if isinstance(other, Measure):
            return Measure(self.re + other.re, self.im + other.im)
        return Measure(self.re + complex(other).real, self.im + complex(other).imag)

    def __sub__(self, other) -> "Measure":
        return self + (-other if isinstance(other, Measure) else -complex(other))

    def cosh(self) -> complex:
        return np.cosh(self.as_complex())

    def sinh(self) -> complex:
        return np.sinh(self.as_complex())

    def tanh(self) -> complex:
        if math.isinf(self.re):
            return complex(math.copysign(1.0, self.re), 0.0)
        return np.tanh(self.as_complex())


ZERO = Measure(0.0, 0.0)
PI_I = Measure(0.0, PI)
HALF_PI_I = Measure(0.0, PI / 2)


def measure_min(a: Measure, b: Measure) -> Measure:
    return a if a.precedes(b) else b


@dataclass(frozen=True)
class NormalizedPoint:
    """Sign-fixed representative of a point together with its classification.

    For an anisotropic point ``vec`` satisfies |vec [S] vec| = 1; for an
    isotropic point it is the Euclidean unit representative.  ``eps`` is
    the unit 1 (exterior) or -i (interior); ``eps2`` its square as a real.
    """

    vec: np.ndarray
    cls: PointClass

    @property
    def eps(self) -> complex:
        if self.cls is PointClass.EXTERIOR:
            return 1.0 + 0.0j
        if self.cls is PointClass.INTERIOR:
            return -1.0j
        raise IsotropicInput("eps undefined for an isotropic point")

    @property
    def eps2(self) -> int:
        if self.cls is PointClass.ISOTROPIC:
            raise IsotropicInput("eps^2 undefined for an isotropic point")
        return self.cls.value

    @property
    def isotropic(self) -> bool:
        return self.cls is PointClass.ISOTROPIC


def classify(p, pol: Polarity, band: float = ISO_BAND) -> PointClass:
    p = np.asarray(p, dtype=float)
    q = pol.point_form(p, p)
    if abs(q) < band * float(p @ p):
        return PointClass.ISOTROPIC
    return PointClass.EXTERIOR if q > 0 else PointClass.INTERIOR


def normalize(p, pol: Polarity, band: float = ISO_BAND, strict: bool = False) -> NormalizedPoint:
    """Sign-fixed, metric-normalized representative with classification.

    With ``strict`` the call refuses points inside the isotropy band
    instead of classifying them as isotropic.
    """
    p = np.asarray(p, dtype=float)
    n2 = float(p @ p)
    if n2 == 0.0:
        raise ValueError("zero vector is not a point")
    q = pol.point_form(p, p)
    if abs(q) < band * n2:
        if strict:
            raise NearIsotropic("point inside the isotropy band")
        vec = p / math.sqrt(n2)
        return NormalizedPoint(vec * lex_sign(vec), PointClass.ISOTROPIC)
    vec = p / math.sqrt(abs(q))
    vec = vec * lex_sign(vec)
    cls = PointClass.EXTERIOR if q > 0 else PointClass.INTERIOR
    return NormalizedPoint(vec, cls)


@dataclass(frozen=True)
class Segment:
    """A branch of the segment between two distinct points."""

    p: np.ndarray
    q: np.ndarray
    branch: int = +1  # +1 or -1

    def __post_init__(self):
        if self.branch not in (+1, -1):
            raise ValueError("branch must be +1 or -1")


def _segment_coords(vec, p_rep, q_rep):
    """Least-squares coordinates (s, t) of ``vec`` in the span of the reps."""
    basis = np.stack([p_rep, q_rep], axis=1)
    st, _, _, _ = np.linalg.lstsq(basis, vec, rcond=None)
    return float(st[0]), float(st[1])


def in_plus_branch(x, np_: NormalizedPoint, nq: NormalizedPoint, tol: float = 1e-12) -> bool:
    """Membership of a point in the '+' branch (the nonnegative cone)."""
    x = np.asarray(x, dtype=float)
    s, t = _segment_coords(x / np.linalg.norm(x), np_.vec, nq.vec)
    scale = max(abs(s), abs(t))
    return s * t >= -tol * scale * scale


def _acosh(x: float) -> float:
    return math.acosh(max(x, 1.0))


def segment_measures(p, q, pol: Polarity, band: float = ISO_BAND):
    """Both branch measures (mu_plus, mu_minus) of the segment [P, Q]."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if proj_equal(p, q):
        raise CoincidentPoints("segment needs distinct endpoints")
    np_ = normalize(p, pol, band)
    nq = normalize(q, pol, band)
    return _segment_measures_normalized(np_, nq, pol)


def _segment_measures_normalized(np_: NormalizedPoint, nq: NormalizedPoint, pol: Polarity):
    a = 0.0 if np_.isotropic else float(np_.eps2)
    c = 0.0 if nq.isotropic else float(nq.eps2)
    b = pol.point_form(np_.vec, nq.vec)

    if np_.isotropic and nq.isotropic:
        return Measure(math.inf, PI / 2), Measure(-math.inf, PI / 2)

    if np_.isotropic or nq.isotropic:
        iso, other = (np_, nq) if np_.isotropic else (nq, np_)
        oc = float(other.eps2)
        # b == 0 means the line is the tangent at the isotropic endpoint.
        if abs(b) < 1e-9:
            return HALF_PI_I, HALF_PI_I
        if oc < 0:
            return Measure(math.inf, PI / 4), Measure(-math.inf, 3 * PI / 4)
        # Exterior companion: the second isotropic point of the line sits in
        # the '+' cone exactly when b < 0.
        if b < 0:
            return Measure(math.inf, 3 * PI / 4), Measure(-math.inf, PI / 4)
        return Measure(-math.inf, PI / 4), Measure(math.inf, 3 * PI / 4)

    # Both endpoints anisotropic: dispatch on the restricted Gram determinant.
    det_g = a * c - b * b
    if abs(det_g) < 1e-12:
        # Tangent line: both points exterior, b = +-1.
        if b > 0:
            return ZERO, PI_I
        return PI_I, ZERO
    if det_g > 0:
        # No isotropic point on the line; both measures purely imaginary.
        theta = math.acos(min(1.0, max(-1.0, b)))
        return Measure(0.0, theta), Measure(0.0, PI - theta)
    # Two isotropic points on the line.
    if a < 0 and c < 0:
        m = _acosh(-b)
        return Measure(m, 0.0), Measure(-m, PI)
    if a > 0 and c > 0:
        if b > 0:
            m = _acosh(b)
            return Measure(-m, 0.0), Measure(m, PI)
        m = _acosh(-b)
        return Measure(m, PI), Measure(-m, 0.0)
    # Mixed pair: drop a perpendicular from the exterior endpoint.
    ext, inte = (np_, nq) if a > 0 else (nq, np_)
    line = np.cross(np_.vec, nq.vec)
    foot = np.cross(line, pol.dual_point(ext.vec))
    if proj_equal(foot, inte.vec):
        m = 0.0
        foot_in_plus = True
    else:
        nfoot = normalize(foot, pol)
        m = _acosh(-pol.point_form(nfoot.vec, inte.vec))
        foot_in_plus = in_plus_branch(nfoot.vec, np_, nq)
    if foot_in_plus:
        return Measure(m, PI / 2), Measure(-m, PI / 2)
    return Measure(-m, PI / 2), Measure(m, PI / 2)


def segment_measure(seg: Segment, pol: Polarity) -> Measure:
    mu_plus, mu_minus = segment_measures(seg.p, seg.q, pol)
    return mu_plus if seg.branch > 0 else mu_minus


def distance(p, q, pol: Polarity) -> Measure:
    """Distance: the branch measure minimal under the measure order."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if proj_equal(p, q):
        return ZERO
    mu_plus, mu_minus = segment_measures(p, q, pol)
    return measure_min(mu_plus, mu_minus)


def line_distance(k, l, pol: Polarity) -> Measure:
    """Angle distance between lines: the distance of their dual points."""
    return distance(pol.dual_line(k), pol.dual_line(l), pol)


def point_line_distance(p, l, pol: Polarity) -> Measure:
    """Distance from a point to its pedal on the line."""
    from .projective import ped

    foot = ped(p, l, pol)
    return distance(p, foot, pol)


def angle_measures(q, s, r, pol: Polarity):
    """Both angle measures (mu_plus, mu_minus) of the angle Q-S-R at vertex S.

    The angle branches are segments of dual points on the dual line of S;
    the branch mapping is fixed by tracking an inner point of [Q, R]_+.
    """
    q = np.asarray(q, dtype=float)
    s = np.asarray(s, dtype=float)
    r = np.asarray(r, dtype=float)
    lq = np.cross(s, q)
    lr = np.cross(s, r)
    if np.linalg.norm(np.cross(lq, lr)) < 1e-12 * np.linalg.norm(lq) * np.linalg.norm(lr):
        raise CollinearVertex("angle needs non-collinear points")
    u = normalize(pol.dual_line(lq), pol)
    v = normalize(pol.dual_line(lr), pol)

    nq = normalize(q, pol)
    nr = normalize(r, pol)
    inner = nq.vec + nr.vec
    if np.linalg.norm(inner) < 1e-9:
        inner = 2.0 * nq.vec + nr.vec
    w = pol.dual_line(np.cross(s, inner))
    same = in_plus_branch(w, u, v)
    mu_plus, mu_minus = _segment_measures_normalized(u, v, pol)
    if same:
        return mu_plus, mu_minus
    return mu_minus, mu_plus


def angle_measure(q, s, r, pol: Polarity, branch: int = +1) -> Measure:
    mu_plus, mu_minus = angle_measures(q, s, r, pol)
    return mu_plus if branch > 0 else mu_minus


def segment_barycentrics(p, q, r, pol: Polarity):
    """Coordinates (x, y) with R = Pi(x P^o + y Q^o) for a point R on P v Q."""
    np_ = normalize(p, pol)
    nq = normalize(q, pol)
    if np_.isotropic or nq.isotropic:
        raise IsotropicInput("anchors must be anisotropic")
    r = np.asarray(r, dtype=float)
    nr = r / np.linalg.norm(r)
    basis = np.stack([np_.vec, nq.vec], axis=1)
    xy, _, _, _ = np.linalg.lstsq(basis, nr, rcond=None)
    resid = np.linalg.norm(basis @ xy - nr)
    if resid > 1e-9:
        raise NotOnLine(f"point off the anchor line (residual {resid:.2e})")
    return float(xy[0]), float(xy[1])


class MidpointKind(Enum):
    PROPER = "proper"
    PSEUDO = "pseudo"
    ISOTROPIC_PAIR = "isotropic"


def semi_midpoints(p, q, pol: Polarity):
    """The two semi-midpoints Pi(P^o +- Q^o) with their classification."""
    np_ = normalize(p, pol)
    nq = normalize(q, pol)
    if np_.isotropic or nq.isotropic:
        raise IsotropicInput("semi-midpoints need anisotropic endpoints")
    if proj_equal(np_.vec, nq.vec):
        raise CoincidentPoints("semi-midpoints of equal points")
    plus = np_.vec + nq.vec
    minus = np_.vec - nq.vec
    if np_.cls == nq.cls:
        kind = MidpointKind.PROPER
    else:
        b = pol.point_form(np_.vec, nq.vec)
        kind = MidpointKind.ISOTROPIC_PAIR if abs(b) < 1e-10 else MidpointKind.PSEUDO
    return plus, minus, kind
