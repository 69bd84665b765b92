"""Chart-plane figures rendered with matplotlib (SVG by default).

Hyperbolic scenes use the unit-disk chart where the absolute conic is the
unit circle; elliptic scenes draw the substitute circle rho x1^2 = x2^2 +
x3^2 in the same chart as a dotted guide.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .. import circles as ci
from ..centers import CENTERS, center, evaluate, orthoaxis
from ..conics import Conic
from ..errors import GeometryError
from ..frame import Frame, bary_join, pedal_triple
from .sampling import sample_frame

SCENES = ("twin-circumcircles", "orthoaxis", "tucker", "hart-feuerbach",
          "apollonian")


def _chart_grid(window, n=601):
    (x0, x1), (y0, y1) = window
    xs = np.linspace(x0, x1, n)
    ys = np.linspace(y0, y1, n)
    return np.meshgrid(xs, ys)


def _conic_contour(ax, f: Frame, conic: Conic, window, color, lw=1.1, ls="-"):
    xx, yy = _chart_grid(window)
    pts = np.stack([np.ones_like(xx), xx, yy], axis=-1)
    bb = pts @ f.Vinv.T
    val = np.einsum("...i,ij,...j->...", bb, conic.M, bb)
    ax.contour(xx, yy, val, levels=[0.0], colors=[color],
               linewidths=lw, linestyles=ls)


def _line(ax, f: Frame, lam, window, color, lw=0.9, ls="-"):
    lam_vec = f.line_from_bary(lam)
    # Chart equation lam . (1, x, y) = 0.
    a, b, c = lam_vec
    (x0, x1), (y0, y1) = window
    if abs(c) > abs(b):
        xs = np.linspace(x0, x1, 64)
        ys = -(a + b * xs) / c
    else:
        ys = np.linspace(y0, y1, 64)
        xs = -(a + c * ys) / b
    keep = (xs >= x0) & (xs <= x1) & (ys >= y0) & (ys <= y1)
    ax.plot(xs[keep], ys[keep], color=color, lw=lw, ls=ls)


def _point(ax, f: Frame, bary, label, color="black"):
    v = f.from_bary(bary)
    if abs(v[0]) < 1e-9 * np.linalg.norm(v):
        return
    x, y = v[1] / v[0], v[2] / v[0]
    ax.plot([x], [y], marker="o", ms=3.5, color=color)
    ax.annotate(label, (x, y), textcoords="offset points", xytext=(4, 3),
                fontsize=8)


def _absolute_guide(ax, f: Frame, window):
    theta = np.linspace(0, 2 * math.pi, 256)
    r = 1.0 / math.sqrt(abs(f.rho))
    if f.rho < 0:
        ax.plot(r * np.cos(theta), r * np.sin(theta), color="#8fc7e8", lw=1.4)
    else:
        ax.plot(r * np.cos(theta), r * np.sin(theta), color="#999999",
                lw=0.9, ls=":")


def _frame_base(ax, f: Frame, window):
    _absolute_guide(ax, f, window)
    for lam in f.sideline_bary:
        _line(ax, f, lam, window, "#444444", lw=1.0)
    for v, name in zip(f.vertex_bary, "ABC"):
        _point(ax, f, v, name)


def _default_frame(regime: str, seed: int) -> Frame:
    return sample_frame(regime, seed)


def render_scene(scene: str, out_path: str, regime: str = "lobachevsky",
                 seed: int = 7, frame: Frame = None) -> str:
    f = frame if frame is not None else _default_frame(regime, seed)
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    window = ((-1.6, 1.6), (-1.6, 1.6)) if f.rho < 0 else ((-2.2, 2.2), (-2.2, 2.2))
    if scene == "twin-circumcircles":
        _frame_base(ax, f, window)
        colors = ("#2a9d2a", "#8332ac", "#a05c2a", "#d08a1d")
        for k in range(4):
            try:
                circ = ci.circumcircle(f, k)
            except GeometryError:
                continue
            _conic_contour(ax, f, circ.conic, window, colors[k])
            try:
                from ..conics import twin_circle

                tw = twin_circle(circ.conic, f, circ.center)
                _conic_contour(ax, f, tw, window, colors[k], lw=0.8, ls="--")
            except GeometryError:
                pass
            _point(ax, f, center("circumcenter", f, k), f"O{k}", colors[k])
    elif scene == "orthoaxis":
        _frame_base(ax, f, window)
        ax_line = orthoaxis(f)
        _line(ax, f, ax_line, window, "#c40000", lw=1.4)
        for cid, label in (("orthocenter", "H"), ("double_point", "G+"),
                           ("pseudo_circumcenter", "O+"), ("de_longchamps", "L"),
                           ("orthostar", "H*"), ("pseudo_ninepoint", "N+")):
            try:
                _point(ax, f, center(cid, f), label, "#c40000")
            except GeometryError:
                pass
    elif scene == "tucker":
        _frame_base(ax, f, window)
        hexg = None
        rng = np.random.default_rng(seed)
        for _ in range(48):
            try:
                hexg = ci.tucker_hexagon(f, float(rng.uniform(-2.2, 2.5)))
                break
            except GeometryError:
                continue
        if hexg is None:
            raise GeometryError("no Tucker hexagon found for this frame")
        _conic_contour(ax, f, hexg.circle.conic, window, "#1f6fb2")
        chain = [hexg.p1, hexg.q2, hexg.p3, hexg.q1, hexg.p2, hexg.q3, hexg.p1]
        for a, b in zip(chain[:-1], chain[1:]):
            _line(ax, f, bary_join(a, b), window, "#77aa33", lw=0.7)
        for pt, name in zip(hexg.points(), ("P1", "Q1", "P2", "Q2", "P3", "Q3")):
            _point(ax, f, pt, name, "#1f6fb2")
        _point(ax, f, hexg.center, "T", "#1f6fb2")
    elif scene == "hart-feuerbach":
        _frame_base(ax, f, window)
        hart = ci.hart_circle(f)
        _conic_contour(ax, f, hart.conic, window, "#c40000")
        for k, circ in enumerate(ci.excircles(f)):
            color = "#7a5230" if k == 0 else "#88bb66"
            _conic_contour(ax, f, circ.conic, window, color)
        for k, pt in enumerate(ci.feuerbach_points(f)):
            _point(ax, f, pt, f"F{k}", "#c40000")
        _point(ax, f, center("hart_center", f), "N^", "#c40000")
    elif scene == "apollonian":
        _frame_base(ax, f, window)
        _conic_contour(ax, f, ci.circumcircle(f).conic, window, "#a05c2a")
        for circ in ci.apollonian_circles(f):
            _conic_contour(ax, f, circ.conic, window, "#4488cc")
        _point(ax, f, center("isodynamic_plus", f), "J+", "#4488cc")
        _point(ax, f, center("isodynamic_minus", f), "J-", "#4488cc")
    else:
        raise ValueError(f"unknown scene {scene!r}; choose from {SCENES}")
    ax.set_aspect("equal")
    ax.set_xlim(*window[0])
    ax.set_ylim(*window[1])
    ax.set_title(f"{scene} ({f.regime.value})", fontsize=10)
    ax.tick_params(labelsize=7)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path
