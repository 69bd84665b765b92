"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints a single pass/fail line; run with `pytest -s
tests/test_acceptance.py` to see the scoreboard.
"""

import io
import math

import numpy as np
import pytest

from cktriangle import circles as ci
from cktriangle import conics as co
from cktriangle import cubics as cu
from cktriangle.centers import CENTERS, center, evaluate, orthoaxis
from cktriangle.errors import GeometryError
from cktriangle.frame import (
    area,
    bary_distance,
    bary_join,
    build_frame,
    cosh_distance,
    isogonal,
    isotomic,
    reflect,
)
from cktriangle.harness.claims import REGISTRY
from cktriangle.harness.limits import (
    LADDER_CENTERS,
    euler_line_locus_check,
    limit_suite,
)
from cktriangle.harness.report import TrialConfig, run_claim, run_claims, write_report
from cktriangle.harness.sampling import child_seed, sample_frame
from cktriangle.measure import (
    Measure,
    distance,
    normalize,
    segment_measures,
    semi_midpoints,
)
from cktriangle.projective import Polarity, cross_ratio, proj_equal

REGIMES = ("elliptic", "lobachevsky", "desitter", "antidesitter")


def _report(num: int, name: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def _hyperboloid_distance(p, q):
    def embed(v):
        v = np.asarray(v, dtype=float)
        w = v * math.copysign(1.0, v[0])
        return w / math.sqrt(w[0] ** 2 - w[1] ** 2 - w[2] ** 2)

    wp, wq = embed(p), embed(q)
    lor = wp[0] * wq[0] - wp[1] * wq[1] - wp[2] * wq[2]
    return math.acosh(max(lor, 1.0))


def test_criterion_1_metric_kernel_equivalence():
    worst = 0.0
    for regime in REGIMES:
        rng = np.random.default_rng(child_seed(1, regime, 0))
        f = sample_frame(regime, child_seed(1, regime, 1))
        checked = 0
        while checked < 1000:
            b1, b2 = rng.normal(size=(2, 3))
            pp = f.bary_form(b1, b1)
            qq = f.bary_form(b2, b2)
            scale = np.linalg.norm(f.Cmat)
            if (abs(pp) < 1e-7 * float(b1 @ b1) * scale
                    or abs(qq) < 1e-7 * float(b2 @ b2) * scale):
                continue
            checked += 1
            d_bary = bary_distance(f, b1, b2)
            d_vec = distance(f.from_bary(b1), f.from_bary(b2), f.pol)
            worst = max(worst, abs(d_bary.re - d_vec.re) + abs(d_bary.im - d_vec.im))
    # Lobachevsky interior pairs against the hyperboloid oracle.
    rng = np.random.default_rng(2)
    done = 0
    while done < 1000:
        p = np.array([1.0, *rng.uniform(-0.8, 0.8, size=2)])
        q = np.array([1.0, *rng.uniform(-0.8, 0.8, size=2)])
        if p[1:] @ p[1:] > 0.8 or q[1:] @ q[1:] > 0.8 or proj_equal(p, q, 1e-6):
            continue
        done += 1
        d = distance(p, q, Polarity(-1.0))
        worst = max(worst, abs(d.im), abs(d.re - _hyperboloid_distance(p, q)))
    _report(1, "metric kernel oracle equivalence", worst < 1e-9, f"max {worst:.2e}")


def test_criterion_2_branch_and_harmonic_laws():
    rng = np.random.default_rng(21)
    worst_sum = worst_cr = worst_refl = 0.0
    pols = (Polarity(1.0), Polarity(-1.0))
    done = 0
    while done < 500:
        pol = pols[done % 2]
        p, q = rng.normal(size=(2, 3))
        np_ = normalize(p, pol)
        nq = normalize(q, pol)
        if np_.isotropic or nq.isotropic or proj_equal(p, q, 1e-6):
            continue
        done += 1
        mp, mm = segment_measures(p, q, pol)
        if mp.finite and mm.finite:
            worst_sum = max(worst_sum, abs(mp.re + mm.re),
                            abs(mp.im + mm.im - math.pi))
        plus, minus, _ = semi_midpoints(p, q, pol)
        worst_cr = max(worst_cr,
                       abs(cross_ratio(np_.vec, nq.vec, plus, minus) + 1))
    done = 0
    rng2 = np.random.default_rng(22)
    f = sample_frame("elliptic", 5)
    fh = sample_frame("lobachevsky", 5)
    while done < 500:
        fr = f if done % 2 == 0 else fh
        m = fr.to_bary(rng2.normal(size=3))
        x = fr.to_bary(rng2.normal(size=3))
        try:
            y = reflect(fr, m, x)
        except GeometryError:
            continue
        done += 1
        d1 = bary_distance(fr, m, x)
        d2 = bary_distance(fr, m, y)
        worst_refl = max(worst_refl, abs(d1.re - d2.re) + abs(d1.im - d2.im))
    ok = worst_sum < 1e-10 and worst_cr < 1e-9 and worst_refl < 1e-9
    _report(2, "branch-sum and harmonic laws", ok,
            f"sum {worst_sum:.1e} cr {worst_cr:.1e} refl {worst_refl:.1e}")


def test_criterion_3_area():
    worst = 0.0
    for regime in REGIMES:
        f = sample_frame(regime, 31)
        total = sum(area(f, k) for k in range(4))
        worst = max(worst, abs(total - complex(0.0, 2 * math.pi)))
    e3r = build_frame([1, 0, 0], [0, 1, 0], [0, 0, 1], Polarity(1.0))
    exact = abs(area(e3r, 0) - complex(0.0, math.pi / 2))
    ok = worst < 1e-12 and exact < 1e-14
    _report(3, "area additivity and self-polar excess", ok,
            f"sum gap {worst:.1e}")


def test_criterion_4_orthoaxis_suite():
    worst_inc = worst_cr = 0.0
    ids = ("de_longchamps", "pseudo_circumcenter", "double_point",
           "orthocenter", "orthostar", "pseudo_ninepoint", "x24_point")
    for regime in REGIMES:
        for t in range(200):
            f = sample_frame(regime, child_seed(4, regime, t))
            ax = orthoaxis(f)
            pts = {cid: center(cid, f) for cid in ids}
            for p in pts.values():
                worst_inc = max(worst_inc, abs(ax @ p)
                                / (np.linalg.norm(ax) * np.linalg.norm(p)))
            worst_cr = max(
                worst_cr,
                abs(cross_ratio(pts["de_longchamps"], pts["orthocenter"],
                                pts["pseudo_circumcenter"], pts["orthostar"]) + 1),
                abs(cross_ratio(pts["de_longchamps"], pts["double_point"],
                                pts["pseudo_circumcenter"], pts["orthocenter"]) + 1),
                abs(cross_ratio(pts["orthocenter"], pts["pseudo_circumcenter"],
                                pts["pseudo_ninepoint"], pts["orthostar"]) + 1),
            )
    ok = worst_inc < 1e-8 and worst_cr < 1e-8
    _report(4, "orthoaxis incidences and harmonic ranges", ok,
            f"inc {worst_inc:.1e} cr {worst_cr:.1e}")


PERSPECTIVITY_CLAIMS = (
    "dual-triple-orthocenter", "vigara-triple-perspective",
    "vigara-dual-perspector", "double-triangle-anticevian",
    "double-L-perspective", "antipedal-opc-isogonal", "antipedal-opc-orthic",
    "orthic-x52-traces", "taylor-perspector-x389", "o-triple-perspectives",
    "i-triple-perspective", "lemoine-family-perspectives",
    "bevan-perspective", "mittenpunkt-perspective", "mitten-harmonic-x100",
    "spieker-pedal-perspective", "schiffler-perspective",
    "antipedal-O-perspectives", "x100-second-meets", "x57-constructions",
    "kosnita-four-triangle", "corner-circumcenter-perspectives",
    "de-villiers", "four-triangle-L", "extangents-x65", "clawson-perspective",
    "x46-perspective", "evans-perspector", "tucker-rt-perspectors",
    "feuerbach-touchpoints", "cevian-quotient-perspector",
)


def test_criterion_5_perspectivity_battery():
    assert len(PERSPECTIVITY_CLAIMS) >= 25
    failures = []
    worst = 0.0
    for cid in PERSPECTIVITY_CLAIMS:
        rec = REGISTRY[cid]
        per_regime = max(1, 100 // len(rec.regimes))
        cfg = TrialConfig(trials=per_regime, seed=55)
        for regime in rec.regimes:
            row = run_claim(rec, regime, cfg)
            worst = max(worst, row.max_residual)
            if row.failed or row.passed == 0:
                failures.append((cid, regime, row.max_residual))
    ok = not failures
    _report(5, f"perspectivity battery ({len(PERSPECTIVITY_CLAIMS)} claims x 100 frames)",
            ok, f"max residual {worst:.1e}" + (f" failures {failures}" if failures else ""))


def test_criterion_6_circle_identities():
    detail = []
    ok = True
    # Conway radius identity on 50 random elliptic triangles.
    worst = 0.0
    rng = np.random.default_rng(61)
    count = 0
    while count < 50:
        f = sample_frame("elliptic", child_seed(6, "conway", count))
        from cktriangle.harness.claims import _power_friendly_frame

        f = _power_friendly_frame(f, rng)
        pts, circ = ci.conway_circle(f)
        a_, b_, c_ = (m.as_complex() for m in f.sides)
        i0 = center("incenter", f)
        from cktriangle.frame import bary_ped

        rin = cosh_distance(f, i0, bary_ped(f, i0, f.sideline_bary[0]))
        worst = max(worst, abs(circ.cosh_r - np.cosh(0.5 * (a_ + b_ + c_)) * rin))
        count += 1
    ok &= worst < 1e-9
    detail.append(f"conway {worst:.1e}")
    # Salmon relation and Hart tangency.
    worst_salmon = worst_hart = 0.0
    for t in range(12):
        regime = ("elliptic", "lobachevsky")[t % 2]
        f = sample_frame(regime, child_seed(6, "hart", t))
        try:
            hc = ci.hart_circle(f)
        except GeometryError:
            continue
        cc = ci.circumcircle(f)
        rh = hc.radius(f).as_complex()
        rr = cc.radius(f).as_complex()
        worst_salmon = max(worst_salmon,
                           min(abs(np.tanh(rh) - 0.5 * np.tanh(rr)),
                               abs(np.tanh(rh) + 0.5 * np.tanh(rr))))
        for e in ci.excircles(f):
            worst_hart = max(worst_hart, co.tangency_residual(hc.conic, e.conic))
    ok &= worst_salmon < 1e-9 and worst_hart < 1e-7
    detail.append(f"salmon {worst_salmon:.1e} hart {worst_hart:.1e}")
    # Power invariance across 8 secants.
    rec = REGISTRY["power-invariance"]
    spread = 0.0
    for regime in rec.regimes:
        row = run_claim(rec, regime, TrialConfig(trials=25, seed=63,
                                                 tol_override=1e-9))
        ok &= row.failed == 0 and row.passed > 0
        spread = max(spread, row.max_residual)
    detail.append(f"power {spread:.1e}")
    # Radical centers: equal modified powers.
    rec = REGISTRY["radical-centers"]
    worst_rc = 0.0
    for regime in rec.regimes:
        row = run_claim(rec, regime, TrialConfig(trials=25, seed=64,
                                                 tol_override=1e-9))
        ok &= row.failed == 0 and row.passed > 0
        worst_rc = max(worst_rc, row.max_residual)
    detail.append(f"radical {worst_rc:.1e}")
    # Apollonian orthogonality.
    rec = REGISTRY["apollonian-orthogonal"]
    worst_ap = 0.0
    for regime in rec.regimes:
        row = run_claim(rec, regime, TrialConfig(trials=25, seed=65,
                                                 tol_override=1e-8))
        ok &= row.failed == 0 and row.passed > 0
        worst_ap = max(worst_ap, row.max_residual)
    detail.append(f"apollonian {worst_ap:.1e}")
    _report(6, "circle identities", ok, " ".join(detail))


def test_criterion_7_cubic_membership():
    worst_member = worst_law = 0.0
    rng = np.random.default_rng(71)
    for regime in ("elliptic", "lobachevsky"):
        f = sample_frame(regime, child_seed(7, regime, 0))
        members = {
            "darboux": [center(c, f) for c in
                        ("pseudo_circumcenter", "orthocenter", "de_longchamps",
                         "bevan")]
            + [center("circumcenter", f, k) for k in range(4)]
            + [center("incenter", f, k) for k in range(4)]
            + [f.Dmat[i] for i in range(3)],
            "lucas": [center(c, f) for c in
                      ("double_point", "orthocenter", "de_longchamps")]
            + [center("centroid", f, k) for k in range(4)]
            + [center("gergonne", f, k) for k in range(4)]
            + [center("nagel", f, k) for k in range(4)],
            "thomson": [center(c, f) for c in
                        ("orthocenter", "pseudo_circumcenter", "double_point")]
            + [center("incenter", f, k) for k in range(4)]
            + [center("lemoine", f, k) for k in range(4)]
            + [center("lemoine_conjugate", f, k) for k in range(4)],
            "neuberg": [center(c, f) for c in
                        ("orthocenter", "pseudo_circumcenter", "orthostar",
                         "isodynamic_plus", "isodynamic_minus", "evans",
                         "neuberg_w2", "neuberg_w3")]
            + [center("incenter", f, k) for k in range(4)],
            "pk_w4_w5": [center(c, f) for c in
                         ("orthocenter", "pseudo_ninepoint", "w5_pivot",
                          "w6_point", "w7_point", "orthostar", "w8_point")],
            "pk_k_nplus": [center(c, f) for c in
                           ("orthocenter", "pseudo_circumcenter", "w9_point",
                            "incenter", "w10_point", "pseudo_ninepoint",
                            "w11_point")],
        }
        for kind, pts in members.items():
            cub = cu.cubic(kind, f)
            for p in pts:
                worst_member = max(worst_member, cub.residual(p))
            on_curve = cu.sample_on_cubic(cub, rng, 100)
            assert len(on_curve) >= 100
            for p in on_curve:
                if min(abs(v) for v in p) < 1e-7:
                    continue
                worst_law = max(worst_law, cu.pivotal_law_residual(cub, f, p))
    ok = worst_member < 1e-8 and worst_law < 1e-8
    _report(7, "cubic membership and pivotal law", ok,
            f"members {worst_member:.1e} law {worst_law:.1e}")


def test_criterion_8_euclidean_limit_ladder():
    reports = limit_suite()
    bad = [r["center"] for r in reports
           if "error" in r or not (r["monotone"] and r["final_gap"] < 1e-5)]
    euler = euler_line_locus_check()
    ok = len(reports) >= 25 and not bad and euler["ok"]
    _report(8, f"flat-limit ladder ({len(reports)} centers)", ok,
            f"failing {bad} euler {euler['max_offset']:.1e}")


def test_criterion_9_akopyan_suite():
    from cktriangle.centers import subframe
    from cktriangle.frame import cevian_triple

    worst_area = worst_sum = worst_cr = 0.0
    for t in range(30):
        regime = ("elliptic", "lobachevsky")[t % 2]
        f = sample_frame(regime, child_seed(9, regime, t))
        gh = center("equal_area_point", f)
        tr = cevian_triple(f, gh)
        e = f.vertex_bary
        for i, (j, k) in enumerate(((1, 2), (2, 0), (0, 1))):
            h1 = area(subframe(f, e[i], e[j], tr[i]), 0)
            h2 = area(subframe(f, e[i], tr[i], e[k]), 0)
            worst_area = max(worst_area, abs(h1 - h2))
        total = sum(ci.akopyan_measure(f, i) for i in range(3))
        worst_sum = max(worst_sum,
                        abs(total - (0.5 * area(f, 0) + complex(0, 2 * math.pi))))
        hh = center("pseudo_orthocenter", f)
        nh = center("hart_center", f)
        o = center("circumcenter", f)
        worst_cr = max(worst_cr, abs(cross_ratio(hh, gh, nh, o) + 1))
    ok = worst_area < 1e-8 and worst_sum < 1e-10 and worst_cr < 1e-8
    _report(9, "equal-area cevians and remeasured angles", ok,
            f"area {worst_area:.1e} sum {worst_sum:.1e} cr {worst_cr:.1e}")


def test_criterion_10_tucker_suite():
    worst_conc = worst_center = 0.0
    rejected = 0
    total = 0
    for regime in ("elliptic", "lobachevsky"):
        f = sample_frame(regime, child_seed(10, regime, 0))
        rng = np.random.default_rng(child_seed(10, regime, 1))
        done = 0
        while done < 50:
            total += 1
            q31 = float(rng.uniform(-2.5, 2.5))
            try:
                hexg = ci.tucker_hexagon(f, q31)
            except GeometryError:
                rejected += 1
                continue
            done += 1
            res, _ = co.concyclicity_residual(list(hexg.points()), f)
            worst_conc = max(worst_conc, res)
            o = center("circumcenter", f)
            kt = evaluate(CENTERS["lemoine"], f)
            lam = bary_join(o, kt)
            worst_center = max(worst_center, abs(lam @ hexg.center)
                               / (np.linalg.norm(lam) * np.linalg.norm(hexg.center)))
    degenerate_rejected = False
    try:
        ci.tucker_hexagon(sample_frame("elliptic", 3), 0.0)
    except GeometryError:
        degenerate_rejected = True
    ok = worst_conc < 1e-8 and worst_center < 1e-9 and degenerate_rejected
    _report(10, "tucker hexagon suite", ok,
            f"concyclic {worst_conc:.1e} center {worst_center:.1e}")


def test_criterion_11_conjecture_ledger():
    rows = []
    for rec in REGISTRY.values():
        if rec.grade == "THEOREM":
            continue
        for regime in rec.regimes:
            rows.append(run_claim(rec, regime, TrialConfig(trials=6, seed=111)))
    assert rows
    print()
    for row in rows:
        denom = max(row.trials, 1)
        print(f"    {row.grade[:4]} {row.claim_id:36} {row.regime:13} "
              f"pass {row.passed}/{denom}")
    ran = all(row.trials + row.rejected > 0 for row in rows)
    _report(11, "conjecture and observation ledger (non-gating)", ran,
            f"{len(rows)} rows")


def test_criterion_12_determinism():
    cfg = TrialConfig(trials=2, seed=42)
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        write_report(run_claims(cfg), buf)
        outs.append(buf.getvalue())
    _report(12, "byte-identical verification reports", outs[0] == outs[1],
            f"{len(outs[0].splitlines())} rows")
