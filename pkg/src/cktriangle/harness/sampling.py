"""Randomized frame samplers for the four classical regimes.

Samplers reject thin or near-degenerate triples so that downstream
constructions stay well away from the discontinuities of the measure.
"""

from __future__ import annotations

import numpy as np

from ..errors import GeometryError, SamplingExhausted
from ..frame import Frame, Regime, build_frame
from ..projective import Polarity

REGIMES = ("elliptic", "lobachevsky", "desitter", "antidesitter")

_MIN_DET = 0.05
_MAX_TRIES = 10_000


def _quality(f: Frame, min_det: float) -> bool:
    det = abs(float(np.linalg.det(f.V)))
    if det < min_det:
        return False
    d = np.abs(np.diag(f.Dmat))
    if np.min(d) < 1e-4 * np.max(d):
        return False
    off = f.d6[3:]
    if np.min(np.abs(off)) < 1e-5 * np.max(np.abs(f.d6)):
        return False  # nearly right-angled frames break orthocenter forms
    return True


def sample_frame(regime: str, seed, min_det: float = _MIN_DET) -> Frame:
    """A random classical frame of the requested regime."""
    rng = np.random.default_rng(seed)
    if regime == "elliptic":
        return _sample_elliptic(rng, min_det)
    if regime == "lobachevsky":
        return _sample_lobachevsky(rng, min_det)
    if regime == "desitter":
        return _sample_hyperbolic_classical(rng, Regime.DE_SITTER, min_det)
    if regime == "antidesitter":
        return _sample_antidesitter(rng, min_det)
    raise ValueError(f"unknown regime {regime!r}")


def _sample_elliptic(rng, min_det) -> Frame:
    pol = Polarity(1.0)
    for _ in range(_MAX_TRIES):
        pts = [rng.normal(size=3) for _ in range(3)]
        try:
            f = build_frame(*pts, pol)
        except GeometryError:
            continue
        if _quality(f, min_det):
            return f
    raise SamplingExhausted("elliptic sampler hit the retry limit")


def _sample_lobachevsky(rng, min_det) -> Frame:
    pol = Polarity(-1.0)
    for _ in range(_MAX_TRIES):
        pts = []
        while len(pts) < 3:
            xy = rng.uniform(-0.9, 0.9, size=2)
            if xy @ xy < 0.81:
                pts.append(np.array([1.0, xy[0], xy[1]]))
        try:
            f = build_frame(*pts, pol)
        except GeometryError:
            continue
        if f.regime is Regime.LOBACHEVSKY and _quality(f, min_det):
            return f
    raise SamplingExhausted("lobachevsky sampler hit the retry limit")


def _sample_hyperbolic_classical(rng, want: Regime, min_det) -> Frame:
    pol = Polarity(-1.0)
    for _ in range(_MAX_TRIES):
        pts = [rng.normal(size=3) for _ in range(3)]
        try:
            f = build_frame(*pts, pol)
        except GeometryError:
            continue
        if f.regime is want and _quality(f, min_det):
            return f
    raise SamplingExhausted(f"{want.value} sampler hit the retry limit")


def _sample_antidesitter(rng, min_det) -> Frame:
    # Duals of proper hyperbolic triples are anti-de-Sitter triples.
    pol = Polarity(-1.0)
    for _ in range(_MAX_TRIES):
        pts = []
        while len(pts) < 3:
            xy = rng.uniform(-0.9, 0.9, size=2)
            if xy @ xy < 0.81:
                pts.append(np.array([1.0, xy[0], xy[1]]))
        try:
            base = build_frame(*pts, pol)
            duals = [base.from_bary(base.Dmat[i]) for i in range(3)]
            f = build_frame(*duals, pol)
        except GeometryError:
            continue
        if f.regime is Regime.ANTI_DE_SITTER and _quality(f, min_det):
            return f
    raise SamplingExhausted("anti-de-sitter sampler hit the retry limit")


def child_seed(master: int, claim_id: str, trial: int) -> int:
    """Deterministic per-claim, per-trial seed fan-out (FNV-1a)."""
    h = 1469598103934665603
    for token in (str(master), claim_id, str(trial)):
        for ch in token.encode():
            h = ((h ^ ch) * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h & 0x7FFFFFFFFFFFFFFF
