"""Metric circle theory: powers, radical loci, similitude, Tucker circles.

Everything here works in barycentric coordinates over a frame.  Circles
are conics with a line of symmetry points; radii and center distances are
complex-valued measures, so powers are complex in general and real in the
classical same-class configurations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from .errors import (
    ConcentricCircles,
    DegenerateConfiguration,
    DegenerateStart,
    GeometryError,
    IsotropicPoint,
    NotACircle,
    RegimeUnsupported,
    UndefinedAtFrame,
)
from .centers import CENTERS, center, evaluate, orthoaxis, subframe, subframe_point
from .conics import (
    CircleInfo,
    Conic,
    circle_about,
    circle_info,
    common_tangents,
    concyclicity_residual,
    conic_conic_intersections,
    conic_line_intersections,
    dual_conic,
    inconic,
    line_tangency_residual,
)
from .frame import (
    Frame,
    bary_distance,
    build_frame,
    bary_join,
    bary_meet,
    bary_ped,
    bary_reflect_line,
    cevian_triple,
    cosh_distance,
    perspector,
    realize,
    reflect,
    star,
    symmedian_point,
    tripolar,
)
from .measure import Measure
from .projective import proj_equal

csqrt = np.emath.sqrt


# -- circle bookkeeping -----------------------------------------------------


@dataclass(frozen=True)
class Circle:
    """A circle conic with its center and complex cosh of the radius."""

    conic: Conic
    center: np.ndarray
    cosh_r: complex

    @classmethod
    def about(cls, f: Frame, m, p) -> "Circle":
        c = circle_about(f, m, p)
        return cls(conic=c, center=np.asarray(m, dtype=float),
                   cosh_r=cosh_distance(f, m, p))

    @classmethod
    def about_lax(cls, f: Frame, m, p) -> "Circle":
        """Circle about M through P without the radius-range restriction."""
        from .conics import circle_with_cosh2_radius
        from .frame import bary_cosh2_distance

        h2 = bary_cosh2_distance(f, m, p)
        c = circle_with_cosh2_radius(f, m, h2)
        if c.residual(np.asarray(p, dtype=float)) > 1e-9:
            raise NotACircle("lax circle misses its defining point")
        return cls(conic=c, center=np.asarray(m, dtype=float),
                   cosh_r=cosh_distance(f, m, p))

    @classmethod
    def from_conic(cls, f: Frame, c: Conic) -> "Circle":
        info = circle_info(c, f)
        if info is None:
            raise NotACircle("conic has no symmetry line")
        return cls(conic=c, center=info.center,
                   cosh_r=np.cosh(info.radius.as_complex()))

    def radius(self, f: Frame) -> Measure:
        info = circle_info(self.conic, f)
        if info is None:
            raise NotACircle("conic has no symmetry line")
        return info.radius


def circumcircle(f: Frame, k: int = 0) -> Circle:
    """Circle about the k-th circumcenter through the vertices."""
    o = center("circumcenter", f, k)
    return Circle.about_lax(f, o, f.vertex_bary[0])


def incircle(f: Frame, k: int = 0) -> Circle:
    """The inconic over the k-th Gergonne point, as a circle about I_k."""
    ge = center("gergonne", f, k)
    conic = inconic(f, ge)
    i_k = center("incenter", f, k)
    foot = bary_ped(f, i_k, f.sideline_bary[0])
    return Circle(conic=conic, center=i_k, cosh_r=cosh_distance(f, i_k, foot))


# -- power of a point -------------------------------------------------------


@dataclass(frozen=True)
class PowerResult:
    p: complex        # tanh-product power
    p_tilde: complex  # modified power cosh(d) / cosh(r)


def power(f: Frame, p, circle: Circle) -> PowerResult:
    """Power of an anisotropic point with respect to a circle."""
    p = np.asarray(p, dtype=float)
    pp = f.bary_form(p, p)
    if abs(pp) < 1e-10 * float(p @ p) * np.linalg.norm(f.Cmat):
        raise IsotropicPoint("power of an isotropic point")
    cd = cosh_distance(f, p, circle.center)
    cr = circle.cosh_r
    return PowerResult(p=(cd - cr) / (cd + cr), p_tilde=cd / cr)


def secant_power(f: Frame, p, circle: Circle, lam) -> Optional[complex]:
    """Chord product tanh(mu(PQ)/2) tanh(mu(PR)/2) along a secant line.

    The two segment measures are taken along a common direction of the
    chord: the branch toward the first intersection fixes the orientation
    for the second.
    """
    from .measure import normalize, segment_measures

    pts = conic_line_intersections(circle.conic, lam)
    if len(pts) != 2:
        return None
    factors = []
    for q in pts:
        mu_plus, _ = segment_measures(f.from_bary(p), f.from_bary(q), f.pol)
        if not mu_plus.finite:
            return None
        factors.append(np.tanh(mu_plus.as_complex() / 2.0))
    return factors[0] * factors[1]


# -- radical lines and centers ----------------------------------------------


def _normalized_center(f: Frame, m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    q = f.bary_form(m, m)
    from .projective import lex_sign

    v = m / math.sqrt(abs(q))
    return v * lex_sign(v)


def radical_lines(f: Frame, s1: Circle, s2: Circle):
    """The two lines of points with equal modified powers.

    Equal squared modified powers is the pair of linear conditions
    x [C] (a1 m1 +- a2 m2) = 0 with a_i = 1 / (cosh r_i sqrt(m_i [C] m_i)),
    which is insensitive to radius branch choices.
    """
    m1 = np.asarray(s1.center, dtype=float)
    m2 = np.asarray(s2.center, dtype=float)
    if proj_equal(m1, m2):
        raise ConcentricCircles("radical lines of concentric circles")
    a1 = 1.0 / (s1.cosh_r * csqrt(f.bary_form(m1, m1)))
    a2 = 1.0 / (s2.cosh_r * csqrt(f.bary_form(m2, m2)))
    try:
        u = realize(np.asarray(a1 * m1 + a2 * m2, dtype=complex))
        v = realize(np.asarray(a1 * m1 - a2 * m2, dtype=complex))
    except ValueError as exc:
        raise DegenerateConfiguration(f"radical combination is not real: {exc}")
    return f.Cmat @ u, f.Cmat @ v


def modified_power_spread(f: Frame, lam, circles, samples=6, rng=None) -> float:
    """Spread of modified powers along a line (for radical-line testing)."""
    rng = rng or np.random.default_rng(0)
    k = int(np.argmax(np.abs(lam)))
    basis = []
    for i in range(3):
        if i == k:
            continue
        e = np.zeros(3)
        e[i] = 1.0
        e[k] = -lam[i] / lam[k]
        basis.append(e)
    worst = 0.0
    got = 0
    for _ in range(40):
        if got >= samples:
            break
        t = rng.normal()
        p = basis[0] + t * basis[1]
        if abs(f.bary_form(p, p)) < 1e-8 * float(p @ p) * np.linalg.norm(f.Cmat):
            continue
        vals = [abs(power(f, p, s).p_tilde) for s in circles]
        m = np.mean(vals)
        worst = max(worst, max(abs(v - m) for v in vals) / max(1.0, abs(m)))
        got += 1
    return worst


def radical_centers(f: Frame, r1: Measure, r2: Measure, r3: Measure):
    """The four equal-power points of circles about the vertices.

    Coordinates are D (cosh r1, +-cosh r2, +-cosh r3); the mates flip two
    signs, forming the anticevian triple with respect to the dual triple.
    """
    c = np.array([np.cosh(r.as_complex()) for r in (r1, r2, r3)])
    out = []
    for signs in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
        v = f.Dmat @ (c * np.array(signs))
        out.append(realize(np.asarray(v, dtype=complex)))
    return tuple(out)


def similitude_centers(f: Frame, s1: Circle, s2: Circle):
    """Common points of tangent pairs on the center join.

    Equivalently the duals of the radical lines of the dual circles; the
    tangent route is used whenever enough real common tangents exist since
    it is insensitive to radius branch choices.
    """
    lam_centers = bary_join(s1.center, s2.center)
    tangents = common_tangents(s1.conic, s2.conic, f)
    meets = []
    for a in range(len(tangents)):
        for b in range(a + 1, len(tangents)):
            mpt = bary_meet(tangents[a], tangents[b])
            if np.linalg.norm(mpt) < 1e-12:
                continue
            if (abs(lam_centers @ mpt)
                    < 1e-7 * np.linalg.norm(lam_centers) * np.linalg.norm(mpt)):
                if all(not proj_equal(mpt, q, 1e-7) for q in meets):
                    meets.append(mpt)
    if len(meets) == 2:
        return meets[0], meets[1]
    if len(meets) == 1:
        # Two real tangents only: the partner completes the harmonic range
        # with the two centers.
        from .projective import harmonic_conjugate

        other = harmonic_conjugate(s1.center / np.linalg.norm(s1.center),
                                   s2.center / np.linalg.norm(s2.center),
                                   meets[0])
        return meets[0], other
    d1 = Circle.from_conic(f, dual_conic(s1.conic, f))
    d2 = Circle.from_conic(f, dual_conic(s2.conic, f))
    l1, l2 = radical_lines(f, d1, d2)
    return f.bary_dual_line(l1), f.bary_dual_line(l2)


# -- antiparallelism ---------------------------------------------------------


def _angle_imbalance(f: Frame, lam, vertex_idx: int) -> complex:
    """Measure difference of the two base angles a line cuts off at a vertex.

    The legs are the two sidelines through the vertex; the value is
    mu(angle at the first leg meet) - mu(angle at the second leg meet).
    """
    from .measure import angle_measure

    legs = [f.sideline_bary[j] for j in range(3) if j != vertex_idx]
    v = f.from_bary(f.vertex_bary[vertex_idx])
    p1 = bary_meet(legs[0], lam)
    p2 = bary_meet(lam, legs[1])
    p1v, p2v = f.from_bary(p1), f.from_bary(p2)
    m1 = angle_measure(p2v, p1v, v, f.pol)
    m2 = angle_measure(p1v, p2v, v, f.pol)
    return m1.as_complex() - m2.as_complex()


def antiparallel(f: Frame, g, h, vertex_idx: int, tol: float = 1e-8) -> bool:
    """Antiparallelism of two lines with respect to the angle at a vertex.

    Lines meeting at the vertex use the bisector-mirror criterion; the
    generic case asks the four leg meets to be chords of one circle.
    """
    g = np.asarray(g, dtype=float)
    h = np.asarray(h, dtype=float)
    v = f.vertex_bary[vertex_idx]
    meet_gh = bary_meet(g, h)
    if np.linalg.norm(meet_gh) > 1e-12 and proj_equal(meet_gh, v, 1e-9):
        i0 = center("incenter", f)
        bis = bary_join(v, i0)
        return proj_equal(bary_reflect_line(f, bis, g), h, tol)
    legs = [f.sideline_bary[j] for j in range(3) if j != vertex_idx]
    p1 = bary_meet(legs[0], g)
    p2 = bary_meet(g, legs[1])
    p3 = bary_meet(legs[1], h)
    p4 = bary_meet(h, legs[0])
    return concyclic_quadruple(f, (p1, p2, p3, p4), tol)


def concyclic_quadruple(f: Frame, pts, tol: float = 1e-8) -> bool:
    """Whether four points lie on one circle.

    Three anisotropic points lie on up to four circles (one per center
    candidate); the quadruple is concyclic when the fourth point lies on
    any of them.
    """
    pts = [np.asarray(p, dtype=float) for p in pts]
    circles = circles_through(f, pts[0], pts[1], pts[2])
    if not circles:
        return False
    return any(c.conic.residual(pts[3]) < tol for c in circles)


def parallel_wrt_angle(f: Frame, g, h, vertex_idx: int, tol: float = 1e-8) -> bool:
    """Parallelism of g and h: the bisector mirror of h is antiparallel to g."""
    v = f.vertex_bary[vertex_idx]
    i0 = center("incenter", f)
    bis = bary_join(v, i0)
    return antiparallel(f, g, bary_reflect_line(f, bis, h), vertex_idx, tol)


# -- Tucker hexagons ---------------------------------------------------------


@dataclass(frozen=True)
class TuckerHexagon:
    p1: np.ndarray
    q1: np.ndarray
    p2: np.ndarray
    q2: np.ndarray
    p3: np.ndarray
    q3: np.ndarray
    circle: Circle
    center: np.ndarray

    def points(self):
        return (self.p1, self.q1, self.p2, self.q2, self.p3, self.q3)


def _require_classical(f: Frame, what: str):
    if not f.classical:
        raise RegimeUnsupported(f"{what} needs a classical frame")


def tucker_hexagon(f: Frame, q31: float) -> TuckerHexagon:
    """Tucker hexagon through Q3 = [q31 : 1 : 0], built from the closed forms."""
    _require_classical(f, "Tucker hexagons")
    y = f.c6
    cc = y[0]
    c23, c31, c12 = y[3], y[4], y[5]
    if abs(q31) < 1e-12:
        raise DegenerateStart("chain starts at a vertex")
    s = csqrt(cc) * csqrt(cc * (q31 * q31 + 1) + 2 * c12 * q31) - cc * q31
    s = complex(s)
    if abs(s - c23) < 1e-12 or abs(s - c12) < 1e-12:
        raise DegenerateStart("degenerate chain parameter")
    p13 = q31 * (s - c12) / (s - c23)
    p21 = ((s - cc) * (s * (c31 - cc) + cc * (2 * c12 - c31) - 1)
           / (2 * cc * (cc - c12) * (s - c12)))
    if abs(p13) < 1e-12 or abs(p21) < 1e-12:
        raise DegenerateStart("chain hits a vertex")
    q3 = np.array([q31, 1.0, 0.0])
    try:
        p1 = realize(np.array([0.0, 1.0, p13], dtype=complex))
        p2 = realize(np.array([p21, 0.0, 1.0], dtype=complex))
        # Center of the Tucker circle.
        r31 = csqrt(cc * (q31 * q31 + 1) + 2 * c12 * q31)
        r13 = csqrt(cc * (p13 * p13 + 1) + 2 * c23 * p13)
        s31 = (q31 * (cc * (c12 - c23 + c31) - 2 * c12 * c31 + 1)
               + cc * (c12 + c23 - c31) - 2 * c12 * c23 + 1)
        s13 = (p13 * (cc * (c12 - c23 - c31) + 2 * c23 * c31 - 1)
               - cc * (c12 + c23 - c31) + 2 * c12 * c23 - 1)
        t = ((2 * c12 * c23 * c31 - cc * (c12 ** 2 + c23 ** 2 + c31 ** 2 - 1))
             * ((p13 + 1) * r31 - (q31 + 1) * r13) / (r31 * s13 + r13 * s31))
        tvals = np.array(
            [
                (cc - c23) * (cc + c23 - c31 - c12 + t),
                (cc - c31) * (cc + c31 - c12 - c23 + t),
                (cc - c12) * (cc + c12 - c23 - c31 + t),
            ]
        )
        tcenter = realize(tvals)
    except ValueError as exc:
        raise DegenerateStart(f"chain leaves the real plane: {exc}")
    try:
        circ = Circle.about(f, tcenter, q3)
    except Exception as exc:
        raise DegenerateStart(f"no Tucker circle for this start: {exc}")
    # Remaining vertices: second intersections of the circle with the sides.
    q1 = _other_intersection(circ.conic, f.sideline_bary[0], p1)
    q2 = _other_intersection(circ.conic, f.sideline_bary[1], p2)
    p3 = _other_intersection(circ.conic, f.sideline_bary[2], q3)
    if q1 is None or q2 is None or p3 is None:
        raise DegenerateStart("Tucker circle misses a sideline")
    return TuckerHexagon(p1=p1, q1=q1, p2=p2, q2=q2, p3=p3, q3=q3,
                         circle=circ, center=tcenter)


def _other_intersection(conic: Conic, lam, known, tol: float = 1e-6):
    pts = conic_line_intersections(conic, lam)
    if not pts:
        return None
    if len(pts) == 1:
        return pts[0]
    d0 = 0.0 if known is None else -1.0
    if known is None:
        return pts[0]
    from .projective import angular_distance

    a0 = angular_distance(pts[0], known)
    a1 = angular_distance(pts[1], known)
    if min(a0, a1) > tol:
        return None
    return pts[1] if a0 < a1 else pts[0]


def tucker_r_t_triples(f: Frame, hexagon: TuckerHexagon):
    """The two diagonal triples of a Tucker hexagon."""
    p1, q1, p2, q2, p3, q3 = hexagon.points()
    r1 = bary_meet(bary_join(p1, q2), bary_join(q1, p3))
    r2 = bary_meet(bary_join(p2, q3), bary_join(q2, p1))
    r3 = bary_meet(bary_join(p3, q1), bary_join(q3, p2))
    t1 = bary_meet(bary_join(p1, q3), bary_join(q1, p2))
    t2 = bary_meet(bary_join(p2, q1), bary_join(q2, p3))
    t3 = bary_meet(bary_join(p3, q2), bary_join(q3, p1))
    return (r1, r2, r3), (t1, t2, t3)


def _lemoine_sides(hexg: TuckerHexagon, n: int):
    if n == 1:
        # Sides of the chain parallel to a, b, c.
        return (bary_join(hexg.p2, hexg.q3), bary_join(hexg.p3, hexg.q1),
                bary_join(hexg.p1, hexg.q2))
    # Sides antiparallel to a, b, c.
    return (bary_join(hexg.q2, hexg.p3), bary_join(hexg.q3, hexg.p1),
            bary_join(hexg.q1, hexg.p2))


def lemoine_chain_parameter(f: Frame, n: int) -> float:
    """Chain start of the first or second Lemoine circle.

    Found as the Tucker chain whose parallel (first kind) or antiparallel
    (second kind) sides pass through the circle perspector.
    """
    from scipy.optimize import brentq

    ktilde = evaluate(CENTERS["lemoine"], f)
    nk = np.linalg.norm(ktilde)

    def signed(theta):
        hexg = tucker_hexagon(f, math.tan(theta))
        lam = _lemoine_sides(hexg, n)[0]
        return float(lam @ ktilde) / (np.linalg.norm(lam) * nk)

    # The tangent substitution covers every chain start on the sideline.
    grid = np.linspace(-1.55, 1.55, 311)
    vals = np.full(grid.shape, np.nan)
    for i, q in enumerate(grid):
        try:
            vals[i] = signed(q)
        except GeometryError:
            continue
    best = None
    for i in range(len(grid) - 1):
        if not (np.isfinite(vals[i]) and np.isfinite(vals[i + 1])):
            continue
        if vals[i] * vals[i + 1] > 0:
            continue
        try:
            theta = brentq(signed, grid[i], grid[i + 1], xtol=1e-15)
            root = math.tan(theta)
            hexg = tucker_hexagon(f, root)
            score = max(abs(float(lam @ ktilde)) / (np.linalg.norm(lam) * nk)
                        for lam in _lemoine_sides(hexg, n))
        except GeometryError:
            continue
        if best is None or score < best[0]:
            best = (score, root)
    if best is None or best[0] > 1e-8:
        # Even-multiplicity crossings leave no sign change; polish the
        # grid minimum of the absolute incidence instead.
        from scipy.optimize import minimize_scalar

        finite = np.where(np.isfinite(vals))[0]
        if len(finite) >= 3:
            k = finite[np.argmin(np.abs(vals[finite]))]
            lo = grid[max(k - 1, 0)]
            hi = grid[min(k + 1, len(grid) - 1)]

            def absval(q):
                try:
                    return abs(signed(q))
                except GeometryError:
                    return 1.0

            res = minimize_scalar(absval, bounds=(lo, hi), method="bounded",
                                  options={"xatol": 1e-15})
            try:
                root = math.tan(float(res.x))
                hexg = tucker_hexagon(f, root)
                score = max(abs(float(lam @ ktilde)) / (np.linalg.norm(lam) * nk)
                            for lam in _lemoine_sides(hexg, n))
                if best is None or score < best[0]:
                    best = (score, root)
            except GeometryError:
                pass
    if best is None or best[0] > 1e-8:
        raise UndefinedAtFrame(f"no Lemoine chain of kind {n} on this frame")
    return best[1]


def lemoine_circle(f: Frame, n: int):
    """The n-th Lemoine circle (n = 1, 2 by chain search, n = 3 constructive)."""
    _require_classical(f, "Lemoine circles")
    if n in (1, 2):
        # The chain chart misses one start position; cyclically relabeled
        # frames cover the rest of the Tucker family.
        last_exc = None
        for shift in (0, 1, 2):
            if shift == 0:
                sub = f
            else:
                verts = [f.from_bary(f.vertex_bary[(i + shift) % 3])
                         for i in range(3)]
                sub = build_frame(*verts, f.pol)
            try:
                hexg = tucker_hexagon(sub, lemoine_chain_parameter(sub, n))
            except GeometryError as exc:
                last_exc = exc
                continue
            if shift == 0:
                return hexg
            conv = lambda p: f.to_bary(sub.from_bary(p))
            labels = [conv(p) for p in hexg.points()]
            # points() order: p1, q1, p2, q2, p3, q3; rotate back.
            rot = np.roll(np.arange(3), shift)
            out = {}
            for i in range(3):
                out[f"p{rot[i] + 1}"] = labels[2 * i]
                out[f"q{rot[i] + 1}"] = labels[2 * i + 1]
            circ = Circle(conic=Conic(_conic_matrix_in(f, sub, hexg.circle.conic)),
                          center=conv(hexg.center), cosh_r=hexg.circle.cosh_r)
            return TuckerHexagon(circle=circ, center=conv(hexg.center), **out)
        raise last_exc if last_exc is not None else UndefinedAtFrame(
            f"no Lemoine chain of kind {n}")
    if n != 3:
        raise ValueError("n must be 1, 2 or 3")
    ktilde = evaluate(CENTERS["lemoine"], f)
    e1, e2, e3 = f.vertex_bary
    # Circumcircles of (B K C), (C K A), (A K B); second meets with the
    # sides.  Each triple admits several circles; keep the chord choices
    # whose hexagon closes into a concyclic chain.
    options = []
    for tri, sides in (((e2, ktilde, e3), (1, 2)), ((e3, ktilde, e1), (2, 0)),
                       ((e1, ktilde, e2), (0, 1))):
        cands = []
        for circ in circles_through(f, *tri):
            pts = []
            for si, known in zip(sides, (tri[2], tri[0])):
                q = _other_intersection(circ.conic, f.sideline_bary[si], known)
                if q is not None:
                    pts.append(q)
            if len(pts) == 2:
                cands.append(pts)
        if not cands:
            raise UndefinedAtFrame("third Lemoine construction degenerates")
        options.append(cands)
    best = None
    for ch1 in options[0]:
        for ch2 in options[1]:
            for ch3 in options[2]:
                (q2, p3), (q3, p1), (q1, p2) = ch1, ch2, ch3
                pts = (p1, q1, p2, q2, p3, q3)
                res, info = _hexagon_fit(f, pts)
                if best is None or res < best[0]:
                    best = (res, pts, info)
    if best is None or best[0] > 1e-7:
        raise UndefinedAtFrame("no concyclic third Lemoine chain found")
    _, (p1, q1, p2, q2, p3, q3), info = best
    pts = (p1, q1, p2, q2, p3, q3)
    circ = None
    score = None
    for cand in circles_through(f, p1, q2, p3):
        res = max(cand.conic.residual(q) for q in pts)
        if score is None or res < score:
            circ, score = cand, res
    if circ is None or score > 1e-7:
        raise UndefinedAtFrame("third Lemoine chain is not concyclic")
    return TuckerHexagon(p1=p1, q1=q1, p2=p2, q2=q2, p3=p3, q3=q3,
                         circle=circ, center=circ.center)


def _hexagon_fit(f: Frame, pts):
    from .conics import concyclicity_residual

    return concyclicity_residual(list(pts), f)


def _conic_matrix_in(f: Frame, sub: Frame, conic: Conic) -> np.ndarray:
    """Re-express a subframe conic matrix in the base frame coordinates."""
    t = f.Vinv @ sub.V
    tinv = np.linalg.inv(t)
    return tinv.T @ conic.M @ tinv


def circles_through(f: Frame, p, q, r, tol: float = 1e-8):
    """All circles through three anisotropic points (up to four).

    The centers are the meets of the perpendicular-bisector pairs, one
    per sign pattern of the equal-cosh conditions; each circle is realized
    through its cosh^2 radius so every admissible distance class works.
    """
    from .conics import circle_with_cosh2_radius
    from .frame import bary_cosh2_distance

    reps = [_normalized_center(f, v) for v in (p, q, r)]
    out = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            rows = np.stack([
                f.Cmat @ reps[0] - s1 * (f.Cmat @ reps[1]),
                f.Cmat @ reps[1] - s2 * (f.Cmat @ reps[2]),
            ])
            m = np.cross(rows[0], rows[1])
            if np.linalg.norm(m) < 1e-12:
                continue
            mm = f.bary_form(m, m)
            if abs(mm) < 1e-11 * float(m @ m) * np.linalg.norm(f.Cmat):
                continue
            h2 = bary_cosh2_distance(f, m, p)
            conic = circle_with_cosh2_radius(f, m, h2)
            if max(conic.residual(q), conic.residual(r)) < tol:
                if all(not proj_equal(m, c.center, 1e-9) for c in out):
                    out.append(Circle(conic=conic, center=m,
                                      cosh_r=cosh_distance(f, m, p)))
    return out


def circle_through(f: Frame, p, q, r) -> Circle:
    """The main circle through three points: the one about the centroid star."""
    sub = subframe(f, np.asarray(p, dtype=float), np.asarray(q, dtype=float),
                   np.asarray(r, dtype=float))
    o = f.to_bary(sub.from_bary(star(sub, np.ones(3))))
    from .conics import circle_with_cosh2_radius
    from .frame import bary_cosh2_distance

    h2 = bary_cosh2_distance(f, o, p)
    conic = circle_with_cosh2_radius(f, o, h2)
    res = max(conic.residual(np.asarray(q, dtype=float)),
              conic.residual(np.asarray(r, dtype=float)))
    if res > 1e-8:
        raise UndefinedAtFrame("main circumcircle misses a defining point")
    return Circle(conic=conic, center=o, cosh_r=cosh_distance(f, o, p))


# -- Conway circle ------------------------------------------------------------


def conway_points(f: Frame):
    """Six points at full side distance from the vertices, by reflections.

    For each vertex pair the construction reflects one vertex in the join
    of the opposite excenter with the other, then in the centroid trace of
    the containing sideline; both resulting points sit at the full length
    of the opposite side from the remaining vertex.
    """
    _require_classical(f, "the Conway circle")
    from .frame import reflect_in_line

    e = f.vertex_bary
    g_traces = (np.array([0.0, 1.0, 1.0]), np.array([1.0, 0.0, 1.0]),
                np.array([1.0, 1.0, 0.0]))
    out = []
    for i in range(3):
        exc = center("incenter", f, i + 1)
        j, k = (i + 1) % 3, (i + 2) % 3
        first = reflect(f, g_traces[j], reflect_in_line(f, bary_join(exc, e[k]), e[j]))
        second = reflect(f, g_traces[k], reflect_in_line(f, bary_join(exc, e[j]), e[k]))
        out.append((first, second))
    (r23, r32), (r31, r13), (r12, r21) = out
    return r23, r32, r31, r13, r12, r21


def conway_circle(f: Frame):
    """Six equal-distance points on a circle about the incenter."""
    pts = conway_points(f)
    i0 = center("incenter", f)
    circ = Circle.about(f, i0, pts[0])
    return pts, circ


# -- Hart circle and Feuerbach points -----------------------------------------


def hart_circle(f: Frame) -> Circle:
    """The circle tangent to the incircle and the three excircles."""
    _require_classical(f, "the Hart circle")
    y = f.c6
    cc = y[0]
    c23, c31, c12 = y[3], y[4], y[5]
    m = np.zeros((3, 3))
    diag = [
        (cc * (c12 - 2 * c23 + c31) + c12 * c31 - 1) / (cc * c23 + 1),
        (cc * (c23 - 2 * c31 + c12) + c23 * c12 - 1) / (cc * c31 + 1),
        (cc * (c31 - 2 * c12 + c23) + c31 * c23 - 1) / (cc * c12 + 1),
    ]
    off = [1 - cc * c23, 1 - cc * c31, 1 - cc * c12]
    m[0, 0], m[1, 1], m[2, 2] = diag
    m[1, 2] = m[2, 1] = off[0]
    m[2, 0] = m[0, 2] = off[1]
    m[0, 1] = m[1, 0] = off[2]
    conic = Conic(m)
    nhat = center("hart_center", f)
    info = circle_info(conic, f)
    if info is None or not proj_equal(info.center, nhat, 1e-6):
        raise UndefinedAtFrame("tangent-circle matrix is not a circle about its center")
    return Circle(conic=conic, center=nhat,
                  cosh_r=np.cosh(info.radius.as_complex()))


def feuerbach_points(f: Frame):
    """Touchpoints of the tangent circle with the four in/excircles."""
    al, be, ga = (mm.as_complex() for mm in f.angles)
    rows = []
    signs = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
    base = [
        np.sinh(al) * np.sinh((be - ga) / 2) ** 2,
        np.sinh(be) * np.sinh((ga - al) / 2) ** 2,
        np.sinh(ga) * np.sinh((al - be) / 2) ** 2,
    ]
    plus = [
        np.sinh(al) * np.cosh((be - ga) / 2) ** 2,
        np.sinh(be) * np.cosh((ga - al) / 2) ** 2,
        np.sinh(ga) * np.cosh((al - be) / 2) ** 2,
    ]
    f00 = realize(np.array(base))
    # The ex-touchpoints swap the squared halves at the flipped positions.
    out = [f00]
    for k in range(1, 4):
        vals = []
        for i in range(3):
            vals.append(base[i] if signs[k][i] > 0 else plus[i])
        out.append(realize(np.array(vals)))
    return tuple(out)


# -- Akopyan line --------------------------------------------------------------


def akopyan_line(f: Frame) -> np.ndarray:
    """The line through the circumcenter and the orthostar."""
    o = center("circumcenter", f)
    hs = center("orthostar", f)
    return bary_join(o, hs)


def akopyan_measure(f: Frame, which: int) -> complex:
    """Remeasured inner angle: mean of the others minus half the excess."""
    from .frame import area

    al, be, ga = (m.as_complex() for m in f.angles)
    angles = (al, be, ga)
    other = [angles[i] for i in range(3) if i != which]
    return other[0] + other[1] - 0.5 * area(f, 0)


# -- apollonian circles --------------------------------------------------------


def apollonian_circles(f: Frame):
    """The three vertex circles about the Lemoine-axis sideline meets."""
    _require_classical(f, "apollonian circles")
    ktilde = evaluate(CENTERS["lemoine"], f)
    axis = tripolar(f, ktilde)
    circles = []
    for i in range(3):
        li = bary_meet(axis, f.sideline_bary[i])
        circles.append(Circle.about(f, li, f.vertex_bary[i]))
    return circles


def isodynamic_points(f: Frame):
    return (center("isodynamic_plus", f), center("isodynamic_minus", f))


# -- extangents ----------------------------------------------------------------


def excircles(f: Frame):
    """The proper incircle and the three excircles as Circle values."""
    return tuple(incircle(f, k) for k in range(4))


def extangent_lines(f: Frame):
    """Fourth common tangent of each excircle pair.

    The join of two excenters passes through both circle centers, so the
    reflection in it fixes both excircles; the mirror image of the shared
    sideline is the remaining common tangent.
    """
    _require_classical(f, "extangent lines")
    exc_centers = [center("incenter", f, k) for k in range(4)]
    out = []
    for i, (j, k) in enumerate(((2, 3), (3, 1), (1, 2))):
        mirror = bary_join(exc_centers[j], exc_centers[k])
        out.append(bary_reflect_line(f, mirror, f.sideline_bary[i]))
    return out


def extangents_triple(f: Frame):
    """Vertices of the triangle bounded by the extangent lines."""
    e1, e2, e3 = extangent_lines(f)
    return bary_meet(e2, e3), bary_meet(e3, e1), bary_meet(e1, e2)
