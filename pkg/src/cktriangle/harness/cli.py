"""Command-line interface: centers, verification runs, limits, loci, figures."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from ..centers import CENTERS, catalog_records, evaluate
from ..errors import GeometryError
from ..frame import build_frame
from ..measure import Measure
from ..projective import Polarity, canonical
from .claims import REGISTRY
from .limits import (
    DEFAULT_CHART_TRIANGLE,
    DEFAULT_LADDER,
    euler_line_locus_check,
    limit_suite,
)
from .report import TrialConfig, coverage_audit, run_claims, summary, write_report
from .sampling import REGIMES, sample_frame

TOL_ENV = "CKTRIANGLE_TOL"


def _load_vertices(path: str):
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        rho = float(data["rho"])
        verts = [np.asarray(v, dtype=float) for v in data["vertices"]]
    else:
        verts = [np.asarray(v, dtype=float) for v in data[:3]]
        rho = float(data[3][0]) if len(data) > 3 else 1.0
    return verts, rho


def _load_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def _frame_from_args(args):
    if getattr(args, "vertices", None):
        verts, rho = _load_vertices(args.vertices)
        return build_frame(*verts, Polarity(rho))
    return sample_frame(args.regime, args.seed)


def _measure_json(m: Measure):
    re = m.re
    if math.isinf(re):
        re = "+inf" if re > 0 else "-inf"
    return {"re": re, "im": m.im}


def _cmd_center(args) -> int:
    f = _frame_from_args(args)
    if args.id not in CENTERS:
        raise KeyError(f"unknown center id {args.id!r}; see `catalog`")
    bary = evaluate(CENTERS[args.id], f, args.k)
    point = f.from_bary(bary)
    data = {
        "id": args.id,
        "triangle_index": args.k,
        "regime": f.regime.value,
        "barycentric": [float(v) for v in canonical(bary)],
        "point": [float(v) for v in canonical(point)],
    }
    print(json.dumps(data, sort_keys=True) if args.json else data)
    return 0


def _cmd_catalog(args) -> int:
    records = catalog_records()
    if args.json:
        print(json.dumps(records, indent=2, sort_keys=True))
    else:
        for rec in records:
            print(f"{rec['id']:28} {rec['etc_limit'] or '-':8} {rec['description']}")
    return 0


def _cmd_verify(args) -> int:
    cfg_kwargs = {}
    if args.config:
        cfg_kwargs.update(_load_config(args.config))
    if args.trials is not None:
        cfg_kwargs["trials"] = args.trials
    if args.seed is not None:
        cfg_kwargs["seed"] = args.seed
    if args.tol is not None:
        cfg_kwargs["tol_override"] = args.tol
    elif os.environ.get(TOL_ENV):
        cfg_kwargs["tol_override"] = float(os.environ[TOL_ENV])
    if args.regime:
        cfg_kwargs["regimes"] = tuple(args.regime)
    if args.claim:
        cfg_kwargs["claim_ids"] = tuple(args.claim)
    cfg = TrialConfig.from_mapping(cfg_kwargs)
    rows = run_claims(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            write_report(rows, fh)
        if args.figures_dir:
            os.makedirs(args.figures_dir, exist_ok=True)
            from .figures import SCENES, render_scene

            for scene in SCENES:
                target = os.path.join(args.figures_dir, f"{scene}.svg")
                try:
                    render_scene(scene, target, seed=cfg.seed)
                except GeometryError:
                    continue
    else:
        write_report(rows, sys.stdout)
    failures = summary(rows)["theorem_failures"]
    return 1 if failures else 0


def _cmd_limit(args) -> int:
    ladder = tuple(float(x) for x in args.rho_ladder.split(",")) \
        if args.rho_ladder else DEFAULT_LADDER
    reports = limit_suite(ladder)
    euler = euler_line_locus_check(ladder[-1])
    payload = {"ladder": reports, "euler_line_check": euler}
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in reports:
            if "error" in r:
                print(f"{r['center']:26} ERROR {r['error']}")
            else:
                flag = "ok" if r["monotone"] and r["final_gap"] < 1e-5 else "FAIL"
                print(f"{r['center']:26} {r['etc']:6} final={r['final_gap']:.2e} {flag}")
        print(f"euler-line locus: offset={euler['max_offset']:.2e} "
              f"{'ok' if euler['ok'] else 'FAIL'}")
    bad = any("error" in r or not (r["monotone"] and r["final_gap"] < 1e-5)
              for r in reports)
    return 1 if (bad or not euler["ok"]) else 0


def _cmd_locus(args) -> int:
    from ..cubics import cubic, sample_on_cubic

    f = _frame_from_args(args)
    cub = cubic(args.kind, f)
    rng = np.random.default_rng(args.seed)
    pts = sample_on_cubic(cub, rng, args.samples)
    data = {
        "kind": args.kind,
        "regime": f.regime.value,
        "coefficients": [float(v) for v in cub.coeffs],
        "monomials": [list(m) for m in cub.MONOMIALS],
        "points": [[float(v) for v in canonical(p)] for p in pts],
        "residuals": [cub.residual(p) for p in pts],
    }
    print(json.dumps(data, sort_keys=True) if args.json else data)
    return 0


def _cmd_figure(args) -> int:
    from .figures import render_scene

    path = render_scene(args.scene, args.out, regime=args.regime, seed=args.seed)
    print(path)
    return 0


def _cmd_audit(args) -> int:
    data = coverage_audit()
    data["claims"] = len(REGISTRY)
    print(json.dumps(data, indent=2, sort_keys=True))
    return 0 if data["matches_expected"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cktriangle",
        description="Triangle geometry under a uniform elliptic/hyperbolic metric",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("center", help="evaluate a catalog center")
    p.add_argument("--id", required=True)
    p.add_argument("--k", type=int, default=0, choices=(0, 1, 2, 3))
    p.add_argument("--vertices", help="JSON file with rho and three vertices")
    p.add_argument("--regime", default="elliptic", choices=REGIMES)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("catalog", help="list catalog centers")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--regime", action="append", choices=REGIMES)
    p.add_argument("--claim", action="append")
    p.add_argument("--config", help="key = value configuration file")
    p.add_argument("--out", help="write the JSON-lines report here")
    p.add_argument("--figures-dir", help="render scene figures next to the report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("limit", help="run the flat-limit ladder")
    p.add_argument("--rho-ladder", help="comma-separated metric parameters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_limit)

    p = sub.add_parser("locus", help="emit a named cubic and sampled points")
    p.add_argument("--kind", required=True,
                   choices=("darboux", "lucas", "thomson", "neuberg",
                            "pk_w4_w5", "pk_k_nplus"))
    p.add_argument("--vertices")
    p.add_argument("--regime", default="elliptic", choices=REGIMES)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_locus)

    p = sub.add_parser("figure", help="render a scene to an SVG (or other) file")
    p.add_argument("--scene", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--regime", default="lobachevsky", choices=REGIMES)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("audit", help="coverage self-audit of the claim registry")
    p.set_defaults(func=_cmd_audit)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, KeyError, OSError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
