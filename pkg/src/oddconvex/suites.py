"""Verification suites grouped by the part of the argument they cover.

Each suite takes a configuration mapping (see ``defaults.json``) and returns a
list of :class:`~oddconvex.report.Check`.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources

import numpy as np

from . import bounds, case_analysis
from .curvature import curvature, is_convex_in_disk, min_curvature_on_circle, radius_of_convexity
from .report import Check, close, exact_equal, greater, less
from .sampler import delta, member_from_measure, sample_members, validate_membership
from .series import eval012, f0_coefficients, section

SHARP = math.sqrt(2) / 3


def load_defaults() -> dict:
    return json.loads(resources.files("oddconvex").joinpath("defaults.json").read_text())


def _s30():
    return section(f0_coefficients(2), 2)


def coefficient_checks(cfg) -> list[Check]:
    n_top = cfg["coeff_n"]
    f0 = f0_coefficients(n_top)
    mismatch = [n for n in range(1, n_top + 1) if bounds.coeff_bound(n) != f0.coefficient(n)]
    checks = [Check(f"coeff_bound(n) == f0 coefficient, n=1..{n_top}", not mismatch,
                    len(mismatch), 0, 0.0, "coefficient bound, equality for f0")]
    bad = []
    for n in range(2, cfg["identity_n"] + 1):
        lhs = 3 * sum((2 * k - 1) * bounds.coeff_bound(k) for k in range(1, n))
        if lhs != (2 * n - 1) * (2 * n - 2) * bounds.coeff_bound(n):
            bad.append(n)
    checks.append(Check(f"induction identity, n=2..{cfg['identity_n']}", not bad, len(bad), 0, 0.0,
                        "coefficient bound induction"))
    return checks


def sharpness_checks(cfg) -> list[Check]:
    f0 = f0_coefficients(bounds.truncation_order(0.5, 1e-14))
    r = 0.5
    _, d1, d2 = eval012(f0, r)
    _, e1, _ = eval012(f0, 1j * r)
    lo, hi = bounds.distortion_bounds(r)
    return [
        close("|z f0''/f0'| at z=r equals 3r^2/(1-r^2)", abs(r * d2 / d1), bounds.log_deriv_bound(r), 1e-12,
              "log-derivative bound sharpness"),
        close("|f0'(r)| equals upper distortion bound", abs(d1), hi, 1e-12, "distortion sharpness"),
        close("|f0'(ir)| equals lower distortion bound", abs(e1), lo, 1e-12, "distortion sharpness"),
    ]


def _members(cfg, n_max):
    return sample_members(cfg["seed"], cfg["samples"], n_max, cfg["max_atoms"])


def sampled_bound_checks(cfg) -> list[Check]:
    """One-sided coefficient, log-derivative and distortion bounds on sampled members."""
    R = cfg["bound_radius"]
    n_max = max(25, bounds.truncation_order(R, 1e-10))
    cb = np.array([float(bounds.coeff_bound(k)) for k in range(1, 26)])
    worst_coeff = worst_log = worst_lo = worst_hi = -math.inf
    for seed, _, f in _members(cfg, n_max):
        a = np.abs(f.numeric[:25])
        worst_coeff = max(worst_coeff, float(np.max(a - cb)))
        rng = np.random.default_rng([seed, 2])
        rad = R * np.sqrt(rng.uniform(0, 1, cfg["bound_points"]))
        z = rad * np.exp(2j * np.pi * rng.uniform(0, 1, cfg["bound_points"]))
        _, d1, d2 = eval012(f, z)
        worst_log = max(worst_log, float(np.max(np.abs(z * d2 / d1) - 3 * rad ** 2 / (1 - rad ** 2))))
        worst_lo = max(worst_lo, float(np.max((1 + rad ** 2) ** -1.5 - np.abs(d1))))
        worst_hi = max(worst_hi, float(np.max(np.abs(d1) - (1 - rad ** 2) ** -1.5)))
    label = f"{cfg['samples']} sampled members"
    return [
        less(f"|a_(2n-1)| - coeff_bound(n), n<=25, {label}", worst_coeff, 0.0, "coefficient bound", 1e-10),
        less(f"|z f''/f'| - 3r^2/(1-r^2), {label}", worst_log, 0.0, "log-derivative bound", 1e-8),
        less(f"(1+r^2)^(-3/2) - |f'|, {label}", worst_lo, 0.0, "distortion lower bound", 1e-8),
        less(f"|f'| - (1-r^2)^(-3/2), {label}", worst_hi, 0.0, "distortion upper bound", 1e-8),
    ]


def lemma1(cfg) -> list[Check]:
    return coefficient_checks(cfg) + sharpness_checks(cfg) + sampled_bound_checks(cfg)


def case2(cfg) -> list[Check]:
    s30 = _s30()
    root = case_analysis.s3_curvature_radius_bound()
    scan = min_curvature_on_circle(s30, SHARP, cfg["grid"])
    res = radius_of_convexity(s30, cfg["tol"], 1.0, cfg["grid"])
    outside = min_curvature_on_circle(s30, SHARP + 0.01, cfg["grid"]).min_value
    return [
        exact_equal("s3 bound root r^2", root.square, Fraction(2, 9), "n=2 lower bound"),
        exact_equal("s3 bound at r^2=2/9", case_analysis.s3_bound_expression(Fraction(2, 9)), Fraction(0),
                    "n=2 lower bound"),
        close("min curvature of s3,0 on |z|=sqrt(2)/3", scan.min_value, 0.0, 1e-9, "n=2 equality case"),
        close("argmin angle of s3,0 curvature", scan.theta_min, math.pi / 2, 1e-6, "n=2 equality case"),
        less("min curvature of s3,0 on |z|=sqrt(2)/3+0.01", outside, 0.0, "sharpness"),
        close("radius of convexity of s3,0", res.radius, SHARP, cfg["tol"], "sharp radius"),
    ]


def case3(cfg) -> list[Check]:
    checks = case_analysis.phi_cascade_check()
    checks.append(Check("phi expansion identity", case_analysis.phi_expansion_identity(), True, True, 0.0,
                        "n=3 squaring steps"))
    checks.append(less("discriminant of 18x^2+57x+325/4", case_analysis.radicand_discriminant(), Fraction(0),
                       "n=3 squaring steps"))
    x = np.linspace(-1.0, 1.0, cfg["t_grid"])
    checks.append(greater(f"min T(x) on {cfg['t_grid']}-point grid", float(np.min(case_analysis.T_eval(x))), 5.0,
                          "T(x) > 5"))
    checks.append(close("T(-1)", case_analysis.T_eval(-1.0), 7.5, 1e-12, "T(x) > 5"))
    checks.append(close("T(1)", case_analysis.T_eval(1.0), 61.5, 1e-12, "T(x) > 5"))
    scan = case_analysis.case3_torus_scan(cfg["torus_grid"])
    checks.append(greater(f"case-3 margin on {cfg['torus_grid']}^2 torus grid", scan.grid_min, 0.0,
                          "n=3 reduced inequality"))
    checks.append(close("refined torus minimum", scan.min_value, 3.75, 1e-3, "n=3 reduced inequality"))
    worst = math.inf
    for s in np.linspace(0, 2 * np.pi, 24, endpoint=False):
        for t in np.linspace(0, 2 * np.pi, 24, endpoint=False):
            worst = min(worst, case_analysis.s5_boundary_min(np.exp(1j * s), np.exp(1j * t), 1024))
    checks.append(greater("s5 curvature on |z|=sqrt(2)/3, 24x24 (alpha, beta)", worst, 0.0, "n=3 direct"))
    return checks


def general(cfg) -> list[Check]:
    t = bounds.tail_bounds(4, SHARP)
    ab = t.A + t.B
    n_lo, n_hi = cfg["n_min"], cfg["n_max"]
    failures = [n for n in range(n_lo, n_hi + 1) if not bounds.general_case_inequality(n, SHARP)]
    lhs = [bounds.general_case_lhs(n, SHARP) for n in range(n_lo, n_hi + 1)]
    return [
        Check("A(4)+B(4) in (0.076, 0.077)", 0.076 < ab < 0.077, ab, "(0.076, 0.077)", 0.0, "tail estimate"),
        less("A(4)+B(4) below 27/(7 11^(3/2))", ab, bounds.tail_threshold(), "tail estimate"),
        close("closed form vs direct summation", bounds.tail_AB_closed_form(SHARP), ab, 1e-12, "tail estimate"),
        greater("C(4, sqrt(2)/3)", t.C, 0.0, "tail estimate"),
        Check(f"general inequality at sqrt(2)/3, n={n_lo}..{n_hi}", not failures, len(failures), 0, 0.0,
              "sections n >= 4"),
        Check("left side decreasing in n", bool(np.all(np.diff(lhs) < 0)), lhs[-1], lhs[0], 0.0, "sections n >= 4"),
    ]


def main_theorem(cfg) -> list[Check]:
    r = cfg["radius_factor"] * SHARP
    R = cfg["membership_radius"]
    n_max = max(cfg["section_max"], bounds.truncation_order(R, 1e-8))
    counterexamples, non_members = [], []
    for seed, _, f in _members(cfg, n_max):
        if not validate_membership(f, R, cfg["grid"]):
            non_members.append(seed)
        for n in range(cfg["section_min"], cfg["section_max"] + 1):
            if not is_convex_in_disk(section(f, n), r, cfg["grid"]):
                counterexamples.append((seed, n))
    n_ext = cfg["extremal_n"]
    reproduced = member_from_measure(delta(), n_ext).coeffs == f0_coefficients(n_ext).coeffs
    sections = f"{cfg['section_min']}..{cfg['section_max']}"
    return [
        Check(f"membership at r={R}, {cfg['samples']} samples", not non_members, len(non_members), 0, 0.0,
              "class definition"),
        Check(f"sections {sections} convex in |z|<={cfg['radius_factor']}*sqrt(2)/3", not counterexamples,
              len(counterexamples), 0, 0.0, "main theorem"),
        Check(f"point mass at 1 reproduces f0 exactly, n<={n_ext}", reproduced, reproduced, True, 0.0,
              "extremal function"),
    ]


SUITES = {
    "lemma1": lemma1,
    "case2": case2,
    "case3": case3,
    "general": general,
    "main-theorem": main_theorem,
}
SCOPES = ("all", *SUITES)


def run(scope: str, cfg: dict | None = None) -> list[Check]:
    cfg = {**load_defaults(), **(cfg or {})}
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    names = list(SUITES) if scope == "all" else [scope]
    return [c for name in names for c in SUITES[name](cfg)]
