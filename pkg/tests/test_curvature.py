import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oddconvex.curvature import (
    check_bracket,
    curvature,
    derivative_zero_count,
    golden_section_min,
    is_convex_in_disk,
    min_curvature_on_circle,
    radius_of_convexity,
)
from oddconvex.series import IDENTITY, f0_coefficients, odd_poly, section

SHARP = math.sqrt(2) / 3


def test_curvature_examples(s30):
    assert curvature(IDENTITY, 0.3 - 0.7j) == 1
    assert curvature(s30, 1j * SHARP) == pytest.approx(0, abs=1e-15)
    assert curvature(s30, 0.5j) == pytest.approx(-0.2, abs=1e-15)


def test_curvature_closed_form(s30):
    z = 0.4 * np.exp(1j * np.linspace(0, 2 * np.pi, 50))
    expected = ((2 + 9 * z * z) / (2 + 3 * z * z)).real
    np.testing.assert_allclose(curvature(s30, z), expected, atol=1e-14)


def test_critical_point_sentinel(s30):
    # s3,0' = 1 + 3z^2/2 vanishes at z = i sqrt(2/3)
    assert curvature(s30, 1j * math.sqrt(2 / 3)) == -math.inf


def test_golden_section_min():
    x, v = golden_section_min(lambda t: (t - 0.3) ** 2, 0.0, 1.0)
    assert abs(x - 0.3) < 1e-9 and v < 1e-18


def test_min_curvature_examples(s30):
    assert min_curvature_on_circle(IDENTITY, 0.9).min_value == 1
    scan = min_curvature_on_circle(s30, SHARP, 4096)
    assert abs(scan.min_value) < 1e-9
    assert scan.theta_min == pytest.approx(math.pi / 2, abs=1e-9)
    assert min_curvature_on_circle(s30, 0.5).min_value <= -0.2
    with pytest.raises(ValueError):
        min_curvature_on_circle(s30, 0.5, grid=32)
    with pytest.raises(ValueError):
        min_curvature_on_circle(s30, 1.5)


def test_scan_is_below_every_grid_value(s50):
    for r in (0.3, 0.5, 0.7):
        scan = min_curvature_on_circle(s50, r, 256)
        theta = np.pi * np.arange(256) / 256
        assert np.all(scan.min_value <= curvature(s50, r * np.exp(1j * theta)) + 1e-9)
        assert 0 <= scan.theta_min < math.pi


def test_is_convex_examples(s30):
    assert is_convex_in_disk(s30, 0.99 * SHARP)
    assert not is_convex_in_disk(s30, SHARP + 0.01)
    assert is_convex_in_disk(IDENTITY, 1.0)


def test_interior_critical_point_defeats_boundary_test(s30):
    # on |z| = 1 the boundary curvature of s3,0 is positive, but s3,0' has two zeros inside
    assert min_curvature_on_circle(s30, 1.0).min_value > 0
    assert derivative_zero_count(s30, 1.0) == 2
    assert not is_convex_in_disk(s30, 1.0)


def test_radius_s30(s30):
    res = radius_of_convexity(s30, 1e-8, 1.0)
    assert not res.capped
    assert abs(res.radius - SHARP) < 1e-8
    assert check_bracket(s30, res)


def test_radius_identity_capped():
    res = radius_of_convexity(IDENTITY, 1e-8, 1.0)
    assert res.capped and res.radius == 1.0


def test_radius_argument_checks(s30):
    with pytest.raises(ValueError):
        radius_of_convexity(s30, 1e-3)
    with pytest.raises(ValueError):
        radius_of_convexity(s30, 1e-8, 1.5)


def _s5_oracle_min(a3, a5, r, m=20000):
    # direct rational-function form of the curvature, independent of the Horner kernel
    w = (r * np.exp(1j * np.pi * np.arange(m) / m)) ** 2
    return ((1 + 9 * a3 * w + 25 * a5 * w * w) / (1 + 3 * a3 * w + 5 * a5 * w * w)).real.min()


def _s5_oracle_radius(a3, a5):
    lo, hi = SHARP * 0.5, 0.9
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if _s5_oracle_min(a3, a5, mid) > 0 else (lo, mid)
    return lo


def test_radius_s50_against_oracle(s50):
    assert _s5_oracle_min(0.5, 0.375, SHARP) > 0
    oracle = _s5_oracle_radius(0.5, 0.375)
    res = radius_of_convexity(s50, 1e-8, 1.0)
    assert res.radius >= SHARP - 1e-8
    assert abs(res.radius - oracle) < 1e-6
    assert check_bracket(s50, res)


def test_f0_section_radii_above_sharp():
    f = f0_coefficients(10)
    for n in range(2, 11):
        res = radius_of_convexity(section(f, n), 1e-8)
        assert res.radius >= SHARP - 1e-8
        assert check_bracket(section(f, n), res)


small_polys = st.lists(st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False),
                       min_size=1, max_size=6).map(lambda c: odd_poly([1, *c]))


@settings(max_examples=50, deadline=None)
@given(small_polys, st.integers(0, 2 ** 32 - 1))
def test_minimum_principle(p, seed):
    r = 0.3
    scan = min_curvature_on_circle(p, r, 1024)
    if derivative_zero_count(p, r) != 0 or not np.isfinite(scan.min_value):
        return
    rng = np.random.default_rng(seed)
    z = r * np.sqrt(rng.uniform(0, 1, 200)) * np.exp(2j * np.pi * rng.uniform(0, 1, 200))
    assert np.all(curvature(p, z) >= scan.min_value - 1e-8)


@given(small_polys, st.floats(0.05, 0.6), st.floats(0, 2 * math.pi))
def test_pi_periodicity(p, r, t):
    a = curvature(p, r * np.exp(1j * t))
    b = curvature(p, r * np.exp(1j * (t + math.pi)))
    if np.isfinite(a):
        assert abs(a - b) <= 1e-12 * max(1, abs(a))


@given(small_polys, st.floats(0, 2 * math.pi), st.floats(0.05, 0.6), st.floats(0, 2 * math.pi))
def test_rotation_equivariance(p, theta, r, t):
    # p_theta(z) = e^{-i theta} p(e^{i theta} z) has coefficients a_k e^{i(2k-2) theta}
    rot = odd_poly([c * np.exp(1j * 2 * k * theta) for k, c in enumerate(p.numeric)])
    z = r * np.exp(1j * t)
    a = curvature(rot, z)
    b = curvature(p, np.exp(1j * theta) * z)
    if np.isfinite(b):
        assert abs(a - b) <= 1e-12 * max(1, abs(b))


def test_rotation_invariance_of_radius(s50):
    theta = 0.7
    rot = odd_poly([c * np.exp(1j * 2 * k * theta) for k, c in enumerate(s50.numeric)])
    a = radius_of_convexity(s50, 1e-8).radius
    b = radius_of_convexity(rot, 1e-8).radius
    assert abs(a - b) <= 2e-8
