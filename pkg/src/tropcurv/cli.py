"""Command line front end.

Exit codes: 0 on success, 1 when a requested verification fails, 2 on bad
input (unreadable document, syntax errors, preconditions not met).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import amoeba, curvature, render
from .core_geometry import AngleConfig, is_elementary
from .errors import TropcurvError
from .patchwork import SignDistribution, real_part
from .tropical import classify, dual_subdivision, hypersurface, parse_tropical, read_document, write_document

CHECKS = ("vertex-sum", "partition", "inequality", "equality", "gauss-bonnet")
MIN_MC_SAMPLES = 1000


class InputError(Exception):
    pass


def _load(args):
    if args.poly is not None:
        f = parse_tropical(args.poly)
        return f, None
    if args.input is None:
        raise InputError("one of --input or --poly is required")
    try:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc
    try:
        return read_document(doc)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed input document: {exc}") from exc


def _signs(f, signs):
    return SignDistribution.for_polynomial(f, signs)


def _cfg(args) -> AngleConfig:
    if args.mc_samples < MIN_MC_SAMPLES:
        raise InputError(f"--mc-samples must be at least {MIN_MC_SAMPLES}")
    return AngleConfig(samples=args.mc_samples, seed=args.seed)


def _emit(args, payload):
    if isinstance(payload, dict):
        payload.setdefault("seed", args.seed)
        payload.setdefault("samples", args.mc_samples)
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = payload
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_subdivide(args):
    f, signs = _load(args)
    sub = dual_subdivision(f)
    doc = write_document(f, signs)
    doc["subdivision"] = sub.to_dict()
    doc["classification"] = classify(f).to_dict()
    _emit(args, doc)
    return 0


def cmd_hypersurface(args):
    f, _ = _load(args)
    V = hypersurface(f)
    out = V.to_dict()
    out["classification"] = classify(f).to_dict()
    _emit(args, out)
    return 0


def cmd_patchwork(args):
    f, signs = _load(args)
    rp = real_part(hypersurface(f), _signs(f, signs))
    _emit(args, {"real_part": rp.to_dict()})
    return 0


def cmd_curvature(args):
    f, signs = _load(args)
    cfg = _cfg(args)
    rep = curvature.polyhedral_total_curvature(f, _signs(f, signs), cfg)
    out = rep.to_dict()
    out["complex"] = curvature.complex_total_curvature(f).to_dict()
    out["seed"] = cfg.seed
    out["samples"] = cfg.samples
    _emit(args, out)
    return 0


def _run_check(name, f, theta, cfg, args):
    if name == "vertex-sum":
        return curvature.verify_vertex_sum(f, theta, cfg).to_dict()
    if name == "inequality":
        return curvature.verify_inequality(f, theta, cfg).to_dict()
    if name == "equality":
        rep = curvature.verify_inequality(f, theta, cfg)
        if not classify(f).non_singular:
            raise InputError("the equality check needs a non-singular polynomial")
        out = rep.to_dict()
        out["quantity"] = "equality"
        out["passed"] = bool(rep.details["equality"])
        return out
    if name == "gauss-bonnet":
        return curvature.gauss_bonnet(f).to_dict()
    if name == "partition":
        sub = dual_subdivision(f)
        reports = []
        for cell in sub.maximal_cells:
            s = cell.simplex
            if s is not None and is_elementary(s) and s.dim <= 3:
                reports.append(curvature.partition_check(s, args.partition_samples, args.seed).to_dict())
        return {
            "quantity": "partition",
            "passed": all(r["passed"] for r in reports),
            "cells_checked": len(reports),
            "reports": reports,
        }
    raise InputError(f"unknown check {name}")


def cmd_verify(args):
    f, signs = _load(args)
    cfg = _cfg(args)
    theta = _signs(f, signs)
    names = CHECKS if args.check == "all" else (args.check,)
    results = {}
    for name in names:
        try:
            results[name] = _run_check(name, f, theta, cfg, args)
        except (InputError, TropcurvError) as exc:
            if args.check != "all":
                raise
            results[name] = {"skipped": str(exc)}
    passed = all(r.get("passed", True) for r in results.values())
    _emit(args, {"checks": results, "passed": passed, "seed": cfg.seed, "samples": cfg.samples})
    return 0 if passed else 1


def cmd_amoeba(args):
    f, signs = _load(args)
    ts = args.t or [0.1, 0.05, 0.01]
    if args.quadrant:
        z = tuple(0 if ch in "+0" else 1 for ch in args.quadrant)
        rows = []
        for t in ts:
            tc = amoeba.trace_real_curve(amoeba.evaluate_family(f, t, signs), args.resolution, [z])
            rows.append({"t": t, "measured": amoeba.amoeba_total_curvature(tc)})
        label = "".join("-" if b else "+" for b in z)
        _emit(args, {"quantity": "amoeba_quadrant", "quadrant": label, "rows": rows})
        return 0
    table = amoeba.convergence_experiment(f, ts, signs, args.resolution)
    if args.out and args.out.endswith(".csv"):
        _emit(args, table.to_csv())
    else:
        _emit(args, table.to_dict())
    return 0


def cmd_render(args):
    f, signs = _load(args)
    kind = args.kind
    if kind == "subdivision":
        svg = render.render_subdivision(f, signs)
    elif kind == "curve":
        svg = render.render_curve(hypersurface(f))
    elif kind == "real":
        svg = render.render_real_part(hypersurface(f), _signs(f, signs))
    else:
        t = (args.t or [0.05])[0]
        tc = amoeba.trace_real_curve(amoeba.evaluate_family(f, t, signs), args.resolution)
        svg = render.render_amoeba(tc)
    _emit(args, svg)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input document (JSON), '-' for stdin")
    common.add_argument("--poly", help="polynomial text, e.g. '0 + x1 + x2'")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--mc-samples", type=int, default=200_000,
                        help="Monte Carlo samples per cone when n >= 3 (>= 1000)")
    common.add_argument("--seed", type=int, default=0, help="base seed for sampling")

    p = argparse.ArgumentParser(prog="tropcurv", description="Curvature of real tropical hypersurfaces")
    sp = p.add_subparsers(dest="command", required=True)
    sp.add_parser("subdivide", parents=[common]).set_defaults(func=cmd_subdivide)
    sp.add_parser("hypersurface", parents=[common]).set_defaults(func=cmd_hypersurface)
    sp.add_parser("patchwork", parents=[common]).set_defaults(func=cmd_patchwork)
    sp.add_parser("curvature", parents=[common]).set_defaults(func=cmd_curvature)

    v = sp.add_parser("verify", parents=[common])
    v.add_argument("--check", choices=CHECKS + ("all",), default="all")
    v.add_argument("--partition-samples", type=int, default=100_000,
                   help="directions sampled per simplex in the partition check")
    v.set_defaults(func=cmd_verify)

    a = sp.add_parser("amoeba", parents=[common])
    a.add_argument("--t", type=float, action="append", help="value in (0, 1); repeat for a table")
    # binary form too: older argparse swallows a bare "--" value
    a.add_argument("--quadrant", choices=["++", "+-", "-+", "--", "00", "01", "10", "11"],
                   help="restrict to one quadrant, as signs (+-) or orthant bits (01)")
    a.add_argument("--resolution", type=int, default=400, help="starting grid size")
    a.set_defaults(func=cmd_amoeba)

    r = sp.add_parser("render", parents=[common])
    r.add_argument("--kind", choices=["subdivision", "curve", "real", "amoeba"], default="subdivision")
    r.add_argument("--t", type=float, action="append")
    r.add_argument("--resolution", type=int, default=400)
    r.set_defaults(func=cmd_render)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, TropcurvError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
