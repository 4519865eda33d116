"""Exit criteria: each test prints one PASS/FAIL line and enforces its runtime budget."""
import io
import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from conftest import ACCEPTANCE_LINES
from oddconvex import bounds, case_analysis as ca, cli, suites
from oddconvex.curvature import min_curvature_on_circle, radius_of_convexity
from oddconvex.curves import curvature_sign_changes, read_csv
from oddconvex.sampler import delta, member_from_measure
from oddconvex.series import f0_coefficients, section

SHARP = math.sqrt(2) / 3


@contextmanager
def criterion(number, title, budget):
    state = {"ok": False, "detail": ""}
    t0 = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - t0
        in_time = elapsed < budget
        ok = state["ok"] and in_time
        line = (f"[{number}] {'PASS' if ok else 'FAIL'}  {title}: {state['detail']}"
                f" ({elapsed:.3f}s, budget {budget:g}s)")
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert state["ok"], line
    assert in_time, line


def test_1_sharp_radius():
    with criterion(1, "sharp radius of s3,0", 1.0) as st:
        s30 = section(f0_coefficients(2), 2)
        res = radius_of_convexity(s30, 1e-8, 1.0)
        scan = min_curvature_on_circle(s30, SHARP, 4096)
        outside = min_curvature_on_circle(s30, SHARP + 0.01, 4096).min_value
        st["ok"] = (abs(res.radius - SHARP) <= 1e-8 and not res.capped
                    and abs(scan.min_value) <= 1e-9 and abs(scan.theta_min - math.pi / 2) <= 1e-9
                    and outside < 0)
        st["detail"] = (f"radius={res.radius:.10f} min@sqrt2/3={scan.min_value:.2e} "
                        f"theta={scan.theta_min:.10f} min@+0.01={outside:.4f}")


def test_2_coefficient_bound_exactness():
    with criterion(2, "coefficient bound exactness", 1.0) as st:
        f0 = f0_coefficients(200)
        equal = all(bounds.coeff_bound(n) == f0.coefficient(n) for n in range(1, 201))
        cb = [bounds.coeff_bound(k) for k in range(1, 101)]
        partial, identity = Fraction(0), True
        for n in range(2, 101):
            partial += (2 * n - 3) * cb[n - 2]
            identity &= 3 * partial == (2 * n - 1) * (2 * n - 2) * cb[n - 1]
        st["ok"] = equal and identity
        st["detail"] = f"f0 equality n<=200: {equal}, induction identity n<=100: {identity}"


def test_3_phi_cascade():
    with criterion(3, "phi cascade exactness", 0.1) as st:
        vals = [ca.phi_derivative_at(k, Fraction(-1)) for k in (3, 2, 1, 0)]
        expected = [Fraction(10235160), Fraction(7165260), Fraction(5153625, 10), Fraction(3739140625, 10000)]
        cascade = all(c.passed for c in ca.phi_cascade_check())
        expansion = ca.phi_expansion_identity()
        st["ok"] = vals == expected and cascade and expansion
        st["detail"] = f"values={[str(v) for v in vals]} expansion identity={expansion}"


def test_4_T_bound():
    with criterion(4, "T(x) > 5 on [-1, 1]", 0.5) as st:
        x = np.linspace(-1.0, 1.0, 100_000)
        t_min = float(np.min(ca.T_eval(x)))
        ends = (ca.T_eval(-1.0), ca.T_eval(1.0))
        st["ok"] = t_min > 5 and ends == (7.5, 61.5)
        st["detail"] = f"min={t_min:.6f} T(-1)={ends[0]} T(1)={ends[1]}"


def test_5_tail_inequality():
    with criterion(5, "tail inequality", 1.0) as st:
        t = bounds.tail_bounds(4, SHARP)
        ab = t.A + t.B
        closed = bounds.tail_AB_closed_form(SHARP)
        threshold = 27 / (7 * 11 ** 1.5)
        general = all(bounds.general_case_inequality(n, SHARP) for n in range(4, 101))
        st["ok"] = 0.076 < ab < 0.077 and ab < threshold and abs(closed - ab) <= 1e-12 and general
        st["detail"] = (f"A+B={ab:.12f} threshold={threshold:.5f} |closed-direct|={abs(closed - ab):.1e} "
                        f"n=4..100: {general}")


def test_6_torus_positivity():
    with criterion(6, "case-3 torus positivity", 30.0) as st:
        scan = ca.case3_torus_scan(720, refine=True)
        at_corner = np.allclose(scan.argmin, (math.pi, math.pi), atol=1e-3)
        st["ok"] = scan.grid_min > 0 and abs(scan.min_value - 3.75) <= 1e-3 and at_corner
        st["detail"] = f"grid min={scan.grid_min:.6f} refined={scan.min_value:.9f} at {scan.argmin}"


def test_7_property_suite():
    with criterion(7, "property suite, 500 sampled members", 240.0) as st:
        cfg = suites.load_defaults()
        assert cfg["samples"] == 500 and (cfg["section_min"], cfg["section_max"]) == (2, 12)
        checks = suites.main_theorem(cfg)[:2] + suites.sampled_bound_checks(cfg)
        failed = [c.name for c in checks if not c.passed]
        st["ok"] = not failed
        st["detail"] = "; ".join(f"{c.name}={c.value}" for c in checks[:2]) + (f" FAILED {failed}" if failed else
                                                                              ", Lemma bounds hold")


def test_8_sampler_oracle():
    with criterion(8, "point mass reproduces f0", 0.1) as st:
        got = member_from_measure(delta(), 40).coeffs
        st["ok"] = got == f0_coefficients(40).coeffs and all(isinstance(c, Fraction) for c in got)
        st["detail"] = f"a_79 = {got[-1]}"


def test_9_figure_contrast(tmp_path):
    with criterion(9, "s3 image convex at sqrt(2)/3, not at 2/3", 5.0) as st:
        changes = {}
        for label, r in (("sharp", SHARP), ("two_thirds", 2 / 3)):
            path = tmp_path / f"{label}.csv"
            code = cli.main(["plot", "--what", "s3-image", "--r", repr(r), "--out", str(path)], out=io.StringIO())
            assert code == 0
            changes[label] = curvature_sign_changes(read_csv(path))
        st["ok"] = changes["sharp"] == 0 and changes["two_thirds"] > 0
        st["detail"] = f"sign changes: r=sqrt(2)/3 -> {changes['sharp']}, r=2/3 -> {changes['two_thirds']}"
