"""Large-curvature limit ladder against the Euclidean oracle.

As the metric parameter grows, the chart geometry of a fixed chart
triangle flattens to the Euclidean plane; every catalog center with a
stated Encyclopedia index must converge in chart coordinates to the
independently computed Euclidean center.
"""

from __future__ import annotations

import numpy as np

from .. import euclid
from ..centers import CENTERS, evaluate
from ..errors import GeometryError, NoEuclideanLimit
from ..frame import build_frame
from ..projective import Polarity

DEFAULT_LADDER = (1e2, 1e4, 1e6)

# Large enough that the near-flat Gram inversion stays well conditioned
# at the top of the ladder.
DEFAULT_CHART_TRIANGLE = (
    (0.525, 0.325),
    (-0.675, -0.25),
    (0.125, -0.65),
)

# Catalog entries taking part in the ladder; each pairs a catalog id with
# the Encyclopedia index of its flat limit.
LADDER_CENTERS = (
    ("incenter", 1),
    ("centroid", 2),
    ("double_point", 2),
    ("lemoine_conjugate", 2),
    ("equal_area_point", 2),
    ("circumcenter", 3),
    ("pseudo_circumcenter", 3),
    ("orthocenter", 4),
    ("pseudo_orthocenter", 4),
    ("circumcenter_isogonal", 4),
    ("pseudo_ninepoint", 5),
    ("hart_center", 5),
    ("symmedian", 6),
    ("lemoine", 6),
    ("gergonne", 7),
    ("nagel", 8),
    ("mittenpunkt", 9),
    ("spieker", 10),
    ("x12_point", 12),
    ("isodynamic_plus", 15),
    ("isodynamic_minus", 16),
    ("clawson", 19),
    ("de_longchamps", 20),
    ("schiffler", 21),
    ("x24_point", 24),
    ("bevan", 40),
    ("x40_second", 40),
    ("x46_point", 46),
    ("x57_point", 57),
    ("x65_point", 65),
    ("w6_point", 79),
    ("w7_point", 80),
    ("x99_point", 99),
    ("x100_point", 100),
    ("x110_point", 110),
    ("x389_point", 389),
    ("evans", 484),
    ("de_villiers", 1127),
)


def chart_point(f, bary) -> np.ndarray:
    v = f.from_bary(bary)
    return np.array([v[1] / v[0], v[2] / v[0]])


def ladder_frames(rho_ladder=DEFAULT_LADDER, chart=DEFAULT_CHART_TRIANGLE):
    out = []
    for rho in rho_ladder:
        verts = [np.array([1.0, x, y]) for x, y in chart]
        out.append(build_frame(*verts, Polarity(float(rho))))
    return out


def euclidean_limit(cid: str, rho_ladder=DEFAULT_LADDER,
                    chart=DEFAULT_CHART_TRIANGLE) -> dict:
    """Chart-distance convergence report for one catalog center."""
    etc = None
    for c, n in LADDER_CENTERS:
        if c == cid:
            etc = n
            break
    if etc is None:
        entry = CENTERS.get(cid)
        if entry is None or entry.etc is None:
            raise NoEuclideanLimit(f"{cid} has no flat-limit oracle")
        etc = entry.etc
    tri = [np.asarray(p, dtype=float) for p in chart]
    target = euclid.etc_point(etc, tri)
    gaps = []
    for f in ladder_frames(rho_ladder, chart):
        p = evaluate(CENTERS[cid], f)
        gaps.append(float(np.linalg.norm(chart_point(f, p) - target)))
    return {
        "center": cid,
        "etc": f"X{etc}",
        "rho_ladder": [float(r) for r in rho_ladder],
        "gaps": gaps,
        "monotone": all(gaps[i + 1] < gaps[i] for i in range(len(gaps) - 1)),
        "final_gap": gaps[-1],
    }


def limit_suite(rho_ladder=DEFAULT_LADDER, chart=DEFAULT_CHART_TRIANGLE):
    """Ladder reports for every participating center."""
    out = []
    for cid, _ in LADDER_CENTERS:
        try:
            out.append(euclidean_limit(cid, rho_ladder, chart))
        except GeometryError as exc:
            out.append({"center": cid, "error": str(exc)})
    return out


def euler_line_locus_check(rho: float = 1e6, chart=DEFAULT_CHART_TRIANGLE,
                           ts=(0.35, 0.7, 1.4)) -> dict:
    """Scaled-side radical centers against the flat Euler line.

    At large curvature parameter the equal-power point of circles with
    radii proportional to the sides must land on the Euler line of the
    chart triangle.
    """
    from .. import circles as ci
    from ..measure import Measure

    verts = [np.array([1.0, x, y]) for x, y in chart]
    f = build_frame(*verts, Polarity(float(rho)))
    tri = [np.asarray(p, dtype=float) for p in chart]
    o = euclid.circumcenter_xy(tri)
    g = euclid.from_barycentric(tri, [1.0, 1.0, 1.0])
    d = (g - o) / np.linalg.norm(g - o)
    worst = 0.0
    sides = [m.as_complex() for m in f.sides]
    for t in ts:
        radii = [Measure((t * s).real, (t * s).imag) for s in sides]
        r0 = ci.radical_centers(f, *radii)[0]
        x = chart_point(f, r0)
        off = (x - o) - np.dot(x - o, d) * d
        worst = max(worst, float(np.linalg.norm(off)))
    return {"rho": rho, "max_offset": worst, "ok": worst < 1e-5}
