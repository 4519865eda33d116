"""The convexity functional ``Re(1 + z p''/p')`` and radius-of-convexity search."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .series import eval012

DEFAULT_GRID = 4096
ANGLE_TOL = 1e-10
CRITICAL_RTOL = 1e-13

_INV_PHI = (math.sqrt(5) - 1) / 2
_INV_PHI2 = (3 - math.sqrt(5)) / 2


@dataclass(frozen=True)
class CurvatureScan:
    r: float
    theta_min: float
    min_value: float
    samples: int


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    capped: bool
    tolerance: float
    theta_min: float = float("nan")


def curvature(poly, z):
    """``Re(1 + z p''(z) / p'(z))``, or ``-inf`` where ``p'`` (nearly) vanishes.

    A critical point on the circle destroys local univalence, so it is
    reported as the worst possible value rather than a division blow-up.
    """
    _, d1, d2 = eval012(poly, z)
    zd2 = np.asarray(z, dtype=complex) * d2
    d1 = np.asarray(d1)
    critical = np.abs(d1) < CRITICAL_RTOL * np.maximum(1.0, np.abs(zd2))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.real(1 + zd2 / np.where(critical, 1, d1))
    out = np.where(critical, -np.inf, out)
    return float(out) if out.ndim == 0 else out


def golden_section_min(f, a: float, b: float, tol: float = ANGLE_TOL):
    """Shrink ``[a, b]`` around a local minimum of ``f``; return ``(x, f(x))``."""
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            h = _INV_PHI * h
            c = a + _INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = _INV_PHI * h
            d = a + _INV_PHI * h
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def min_curvature_on_circle(poly, r: float, grid: int = DEFAULT_GRID) -> CurvatureScan:
    """Minimum of the curvature functional on ``|z| = r``.

    Odd polynomials give a pi-periodic functional, so only ``[0, pi)`` is
    sampled.  The best grid cell (smallest angle on ties) is refined by
    golden-section search.
    """
    if not 0 < r <= 1:
        raise ValueError(f"radius must lie in (0, 1], got {r}")
    if grid < 64:
        raise ValueError(f"grid must be at least 64, got {grid}")
    step = math.pi / grid
    theta = np.arange(grid) * step
    values = curvature(poly, r * np.exp(1j * theta))
    j = int(np.argmin(values))
    best_theta, best = float(theta[j]), float(values[j])
    if best == -math.inf:
        return CurvatureScan(r, best_theta, best, grid)

    def g(t):
        return curvature(poly, r * complex(math.cos(t), math.sin(t)))

    t, v = golden_section_min(g, best_theta - step, best_theta + step)
    if v < best:
        best_theta, best = t % math.pi, v
    return CurvatureScan(r, best_theta, best, grid)


def winding_number(values: np.ndarray) -> int:
    """Winding number about 0 of a closed curve sampled densely on a full turn."""
    phase = np.unwrap(np.angle(np.append(values, values[0])))
    return int(round((phase[-1] - phase[0]) / (2 * np.pi)))


def derivative_zero_count(poly, r: float, grid: int = DEFAULT_GRID) -> int:
    """Number of zeros of ``p'`` in ``|z| < r`` by the argument principle."""
    theta = 2 * np.pi * np.arange(2 * grid) / (2 * grid)
    _, d1, _ = eval012(poly, r * np.exp(1j * theta))
    return winding_number(d1)


def _disk_scan(poly, r: float, grid: int) -> CurvatureScan:
    # the boundary minimum only bounds the disk when p' has no zeros inside
    scan = min_curvature_on_circle(poly, r, grid)
    if scan.min_value > 0 and derivative_zero_count(poly, r, grid) != 0:
        return CurvatureScan(r, scan.theta_min, -math.inf, grid)
    return scan


def is_convex_in_disk(poly, r: float, grid: int = DEFAULT_GRID) -> bool:
    """Positive curvature on ``|z| = r`` and no critical point of ``p`` inside."""
    return _disk_scan(poly, r, grid).min_value > 0


def radius_of_convexity(poly, tol: float = 1e-8, r_cap: float = 1.0,
                        grid: int = DEFAULT_GRID) -> RadiusResult:
    """Largest ``r <= r_cap`` for which ``p`` is convex in ``|z| < r``, by bisection.

    The convex region is assumed to be a disk ``|z| < rho``; use
    :func:`check_bracket` to confirm that assumption after the fact.
    """
    if not 0 < tol <= 1e-6:
        raise ValueError(f"tol must lie in (0, 1e-6], got {tol}")
    if not 0 < r_cap <= 1:
        raise ValueError(f"r_cap must lie in (0, 1], got {r_cap}")
    top = _disk_scan(poly, r_cap, grid)
    if top.min_value > 0:
        return RadiusResult(r_cap, True, tol, top.theta_min)
    lo, hi, hi_scan = 0.0, r_cap, top
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        scan = _disk_scan(poly, mid, grid)
        if scan.min_value > 0:
            lo = mid
        else:
            hi, hi_scan = mid, scan
    return RadiusResult(0.5 * (lo + hi), False, tol, hi_scan.theta_min)


def check_bracket(poly, result: RadiusResult, grid: int = DEFAULT_GRID) -> bool:
    """Curvature is positive at ``radius - tol`` and nonpositive at ``radius + tol``."""
    if result.capped:
        return is_convex_in_disk(poly, result.radius, grid)
    inner = result.radius - result.tolerance
    outer = min(result.radius + result.tolerance, 1.0)
    inner_ok = inner <= 0 or is_convex_in_disk(poly, inner, grid)
    return inner_ok and not is_convex_in_disk(poly, outer, grid)
