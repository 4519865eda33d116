"""Command-line front end: ``verify``, ``radius``, ``plot`` and ``sample``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage or
configuration errors.  ``ODDCONVEX_REPORT_DIR`` names a directory that
receives ``report-<scope>.json`` from ``verify``.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import curves, suites
from .bounds import truncation_order
from .curvature import radius_of_convexity
from .report import VerificationReport
from .sampler import member_from_measure, random_measure, sample_members, validate_membership
from .series import f0_coefficients, section

REPORT_DIR_ENV = "ODDCONVEX_REPORT_DIR"

# CLI flag -> config key
_OVERRIDES = {
    "grid": "grid", "tol": "tol", "n_min": "n_min", "n_max": "n_max", "seed": "seed",
    "samples": "samples", "torus_grid": "torus_grid",
}


class UsageError(Exception):
    pass


def _config(args) -> dict:
    cfg = suites.load_defaults()
    if args.config:
        try:
            cfg.update(json.loads(Path(args.config).read_text()))
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}")
    for flag, key in _OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is not None:
            cfg[key] = value
    return cfg


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    report = VerificationReport(args.scope, suites.run(args.scope, cfg), cfg)
    for line in report.summary_lines():
        print(line, file=out)
    target = args.report
    if target is None and os.environ.get(REPORT_DIR_ENV):
        target = Path(os.environ[REPORT_DIR_ENV]) / f"report-{args.scope}.json"
    if target is not None:
        try:
            Path(target).write_text(report.to_json() + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write report: {exc}")
    return 0 if report.passed else 1


def _member(spec: str, n: int):
    if spec == "f0":
        return f0_coefficients(n)
    if spec.startswith("seed:"):
        try:
            seed = int(spec[5:])
        except ValueError:
            raise UsageError(f"bad seed in {spec!r}")
        return next(sample_members(seed, 1, n))[2]
    raise UsageError(f"unknown function {spec!r}; use f0 or seed:<int>")


def cmd_radius(args, out) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if not 0 < args.tol <= 1e-6:
        raise UsageError("--tol must lie in (0, 1e-6]")
    poly = section(_member(args.function, args.n), args.n)
    res = radius_of_convexity(poly, args.tol, args.r_cap, args.grid or 4096)
    print(f"radius: {res.radius:.10f}", file=out)
    print(f"capped: {str(res.capped).lower()}", file=out)
    print(f"theta_min: {res.theta_min:.10f}", file=out)
    print(f"tolerance: {res.tolerance:g}", file=out)
    return 0


def cmd_plot(args, out) -> int:
    if args.samples < 64:
        raise UsageError("--samples must be at least 64")
    if args.r is not None and not 0 < args.r < 1:
        raise UsageError("--r must lie in (0, 1)")
    sharp = math.sqrt(2) / 3
    if args.what == "s3-image":
        curve = curves.s3_image(args.r or sharp, args.samples)
    elif args.what == "f0-image":
        curve = curves.f0_image(args.r or 0.99, args.samples)
    elif args.what == "t-graph":
        curve = curves.t_graph(args.samples)
    else:
        curve = curves.curvature_profile(args.n, args.r or sharp, args.samples)
    csv_path = Path(args.out or f"{args.what}.csv")
    try:
        curves.write_csv(curve, csv_path)
        if args.svg:
            curves.write_svg(curve, csv_path.with_suffix(".svg"))
    except OSError as exc:
        raise UsageError(f"cannot write {csv_path}: {exc}")
    print(f"wrote {csv_path} ({len(curve.x)} points)", file=out)
    if curve.kind in ("circle-image", "disk-image"):
        print(f"curvature sign changes: {curves.curvature_sign_changes(curve)}", file=out)
    elif curve.kind == "t-graph":
        print(f"min T: {np.min(curve.y):.10f}", file=out)
    return 0


def _fmt_coeff(c) -> str:
    c = complex(c)
    if c.imag == 0:
        return f"{c.real:.12g}"
    return f"{c.real:.12g}{c.imag:+.12g}j"


def cmd_sample(args, out) -> int:
    if args.count < 1 or args.n_max < 1:
        raise UsageError("--count and --n-max must be positive")
    r_test = 0.8
    n_eval = max(args.n_max, truncation_order(r_test, 1e-8))
    for seed, measure, f in sample_members(args.seed, args.count, n_eval):
        verdict = "PASS" if validate_membership(f, r_test) else "FAIL"
        coeffs = " ".join(_fmt_coeff(c) for c in f.coeffs[: args.n_max])
        print(f"seed={seed} atoms={len(measure.atoms)} membership={verdict} coeffs=[{coeffs}]", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddconvex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--scope", default="all", choices=suites.SCOPES)
    v.add_argument("--config", help="JSON file overriding defaults")
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--grid", type=int)
    v.add_argument("--tol", type=float)
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--torus-grid", type=int)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("radius", help="radius of convexity of a section")
    r.add_argument("--function", default="f0", help="f0 or seed:<int>")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--tol", type=float, default=1e-8)
    r.add_argument("--r-cap", type=float, default=1.0)
    r.add_argument("--grid", type=int)
    r.set_defaults(func=cmd_radius)

    pl = sub.add_parser("plot", help="write curve data as CSV (and SVG)")
    pl.add_argument("--what", required=True, choices=("s3-image", "f0-image", "t-graph", "curvature"))
    pl.add_argument("--r", type=float)
    pl.add_argument("--n", type=int, default=2)
    pl.add_argument("--samples", type=int, default=1024)
    pl.add_argument("--out")
    pl.add_argument("--svg", action="store_true")
    pl.set_defaults(func=cmd_plot)

    s = sub.add_parser("sample", help="print coefficients of sampled members")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--n-max", type=int, default=5)
    s.set_defaults(func=cmd_sample)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
