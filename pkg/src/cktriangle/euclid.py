"""Independent Euclidean triangle-center oracle on chart coordinates.

Used to pin the large-curvature limits of the catalog: every function
here works with plain planar geometry on a chart triangle and never
touches the metric kernel.  Formulas follow the Encyclopedia of Triangle
Centers conventions (barycentric, first coordinate shown, rest cyclic).
"""

from __future__ import annotations

import math

import numpy as np


def side_lengths(tri):
    a2, b2, c2 = (np.asarray(p, dtype=float) for p in tri)
    return (
        float(np.linalg.norm(b2 - c2)),
        float(np.linalg.norm(c2 - a2)),
        float(np.linalg.norm(a2 - b2)),
    )


def angles(tri):
    a, b, c = side_lengths(tri)
    al = math.acos((b * b + c * c - a * a) / (2 * b * c))
    be = math.acos((c * c + a * a - b * b) / (2 * c * a))
    return al, be, math.pi - al - be


def from_barycentric(tri, w) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    pts = np.stack([np.asarray(p, dtype=float) for p in tri])
    return (w @ pts) / w.sum()


def _cyc(fn, a, b, c):
    return np.array([fn(a, b, c), fn(b, c, a), fn(c, a, b)])


def _cyc_ang(fn, al, be, ga):
    return np.array([fn(al, be, ga), fn(be, ga, al), fn(ga, al, be)])


def perpendicular_foot(x, p, q):
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    d = (q - p) / np.linalg.norm(q - p)
    return p + d * np.dot(np.asarray(x, dtype=float) - p, d)


def reflect_in_line(x, p, q):
    return 2.0 * perpendicular_foot(x, p, q) - np.asarray(x, dtype=float)


def lines_meet(p1, p2, q1, q2):
    a1 = np.array([p1[1] - p2[1], p2[0] - p1[0]])
    b1 = float(np.dot(a1, p1))
    a2 = np.array([q1[1] - q2[1], q2[0] - q1[0]])
    b2 = float(np.dot(a2, q1))
    return np.linalg.solve(np.stack([a1, a2]), np.array([b1, b2]))


def triple_perspector(t1, t2):
    """Common point of the three cross joins of two planar triples."""
    ls = []
    for p, q in zip(t1, t2):
        ls.append(np.cross(np.array([1.0, p[0], p[1]]), np.array([1.0, q[0], q[1]])))
    x = np.cross(ls[0], ls[1])
    return np.array([x[1] / x[0], x[2] / x[0]])


def excenters(tri):
    a, b, c = side_lengths(tri)
    return (
        from_barycentric(tri, [-a, b, c]),
        from_barycentric(tri, [a, -b, c]),
        from_barycentric(tri, [a, b, -c]),
    )


def orthic(tri):
    a2, b2, c2 = tri
    return (
        perpendicular_foot(a2, b2, c2),
        perpendicular_foot(b2, c2, a2),
        perpendicular_foot(c2, a2, b2),
    )


def circumcenter_xy(tri):
    a, b, c = side_lengths(tri)
    return from_barycentric(
        tri,
        [a * a * (b * b + c * c - a * a),
         b * b * (c * c + a * a - b * b),
         c * c * (a * a + b * b - c * c)],
    )


def incenter_xy(tri):
    a, b, c = side_lengths(tri)
    return from_barycentric(tri, [a, b, c])


# -- constructive oracles ----------------------------------------------------


def kosnita_xy(tri):
    o = circumcenter_xy(tri)
    a2, b2, c2 = tri
    subs = [(o, b2, c2), (o, c2, a2), (o, a2, b2)]
    centers = [circumcenter_xy(s) for s in subs]
    return triple_perspector(centers, tri)


def de_villiers_xy(tri):
    i = incenter_xy(tri)
    a2, b2, c2 = tri
    subs = [(i, b2, c2), (i, c2, a2), (i, a2, b2)]
    centers = [incenter_xy(s) for s in subs]
    return triple_perspector(centers, tri)


def evans_xy(tri):
    exc = excenters(tri)
    a2, b2, c2 = tri
    refl = (
        reflect_in_line(a2, b2, c2),
        reflect_in_line(b2, c2, a2),
        reflect_in_line(c2, a2, b2),
    )
    return triple_perspector(exc, refl)


def x389_xy(tri):
    a2, b2, c2 = tri
    fa, fb, fc = orthic(tri)
    hs = []
    for corner, p, q in ((a2, fb, fc), (b2, fc, fa), (c2, fa, fb)):
        sub = (corner, p, q)
        # orthocenter of the corner triangle
        al = perpendicular_foot(corner, p, q)
        h = lines_meet(corner, al,
                       p, perpendicular_foot(p, q, corner))
        hs.append(h)
    return triple_perspector(hs, orthic(tri))


def x46_xy(tri):
    return triple_perspector(excenters(tri), orthic(tri))


def x52_xy(tri):
    """Perspector carrying the pedals of H on the orthic sidelines."""
    raise NotImplementedError


ETC_FORMULAS = {
    1: lambda a, b, c, al, be, ga: _cyc(lambda x, y, z: x, a, b, c),
    2: lambda a, b, c, al, be, ga: np.ones(3),
    3: lambda a, b, c, al, be, ga: _cyc_ang(lambda x, y, z: math.sin(2 * x), al, be, ga),
    4: lambda a, b, c, al, be, ga: _cyc_ang(lambda x, y, z: math.tan(x), al, be, ga),
    5: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * math.cos(y - z), al, be, ga),
    6: lambda a, b, c, al, be, ga: _cyc(lambda x, y, z: x * x, a, b, c),
    7: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: (x + y + z - 2 * y) * (x + y + z - 2 * z) / 4, a, b, c),
    8: lambda a, b, c, al, be, ga: _cyc(lambda x, y, z: y + z - x, a, b, c),
    9: lambda a, b, c, al, be, ga: _cyc(lambda x, y, z: x * (y + z - x), a, b, c),
    10: lambda a, b, c, al, be, ga: _cyc(lambda x, y, z: y + z, a, b, c),
    12: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * (1 + math.cos(y - z)), al, be, ga),
    15: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * math.sin(x + math.pi / 3), al, be, ga),
    16: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * math.sin(x - math.pi / 3), al, be, ga),
    19: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.tan(x), al, be, ga) * _cyc(lambda x, y, z: x, a, b, c),
    20: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * (math.cos(x) - math.cos(y) * math.cos(z)),
        al, be, ga),
    21: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) / (math.cos(y) + math.cos(z)), al, be, ga),
    24: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.tan(x) * math.cos(2 * x), al, be, ga),
    40: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * (1 + math.cos(x) - math.cos(y) - math.cos(z)),
        al, be, ga),
    54: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) / math.cos(y - z), al, be, ga),
    55: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: x * x * (y + z - x), a, b, c),
    56: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: x * x / (y + z - x), a, b, c),
    57: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: x / (y + z - x), a, b, c),
    65: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) * (math.cos(y) + math.cos(z)), al, be, ga),
    79: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) / (1 + 2 * math.cos(x)), al, be, ga),
    80: lambda a, b, c, al, be, ga: _cyc_ang(
        lambda x, y, z: math.sin(x) / (1 - 2 * math.cos(x)), al, be, ga),
    99: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: 1.0 / (y * y - z * z), a, b, c),
    100: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: x / (y - z), a, b, c),
    110: lambda a, b, c, al, be, ga: _cyc(
        lambda x, y, z: x * x / (y * y - z * z), a, b, c),
}

ETC_CONSTRUCTIVE = {
    54: kosnita_xy,
    484: evans_xy,
    1127: de_villiers_xy,
    389: x389_xy,
    46: x46_xy,
}


def etc_point(n: int, tri) -> np.ndarray:
    """Chart coordinates of the Euclidean center X_n of the chart triangle."""
    if n in ETC_FORMULAS:
        a, b, c = side_lengths(tri)
        al, be, ga = angles(tri)
        return from_barycentric(tri, ETC_FORMULAS[n](a, b, c, al, be, ga))
    if n in ETC_CONSTRUCTIVE:
        return ETC_CONSTRUCTIVE[n](tri)
    raise KeyError(f"no Euclidean oracle for X{n}")


def available_etc():
    return sorted(set(ETC_FORMULAS) | set(ETC_CONSTRUCTIVE))
