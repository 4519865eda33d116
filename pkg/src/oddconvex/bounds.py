"""Closed-form estimates for the class and the tail inequality for sections n >= 4."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError

TAIL_RTOL = 1e-18
SHARP_RADIUS = math.sqrt(2) / 3


@dataclass(frozen=True)
class TailBounds:
    n: int
    r: float
    A: float
    B: float
    C: float
    terms_used: int


def coeff_bound(n: int) -> Fraction:
    """Sharp bound on ``|a_{2n-1}|``: ``C(2n-2, n-1) / 4**(n-1)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Fraction(comb(2 * n - 2, n - 1), 4 ** (n - 1))


def _check_radius(r: float) -> None:
    if not 0 <= r < 1:
        raise DomainError(f"radius must lie in [0, 1), got {r}")


def log_deriv_bound(r: float) -> float:
    """Upper bound for ``|z f''/f'|`` on ``|z| = r``."""
    _check_radius(r)
    return 3 * r * r / (1 - r * r)


def distortion_bounds(r: float) -> tuple[float, float]:
    """``(lo, hi)`` with ``lo <= |f'(z)| <= hi`` on ``|z| = r``."""
    _check_radius(r)
    return (1 + r * r) ** -1.5, (1 - r * r) ** -1.5


def tail_bounds(n: int, r: float) -> TailBounds:
    """Sum the majorants of ``|sigma'|`` and ``|z sigma''|`` from ``k = n + 1``.

    The k-th A-term is ``(2k-1) c_k r**(2k-2)`` with ``c_k = coeff_bound(k)``;
    the B-term carries an extra factor ``2k - 2``.  Consecutive A-terms have
    ratio ``r**2 (2k+1) / (2k)``, so only the first term needs the exact seed.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_radius(r)
    k = n + 1
    r2 = r * r
    if r2 == 0.0:
        return TailBounds(n, r, 0.0, 0.0, 1.0, 0)
    seed = float((2 * k - 1) * coeff_bound(k))
    log_term = math.log(seed) + (2 * k - 2) * math.log(r)
    term = math.exp(log_term)
    A = B = 0.0
    used = 0
    while True:
        A += term
        B += (2 * k - 2) * term
        used += 1
        ratio = r2 * (2 * k + 1) / (2 * k)
        # B-ratio is ratio * (2k)/(2k-2); stop only once both are contracting
        contracting = ratio * (2 * k) / (2 * k - 2) < 1
        if contracting and (2 * k - 2) * term < TAIL_RTOL * (B + 1) and term < TAIL_RTOL * (A + 1):
            break
        term *= ratio
        k += 1
    C = 1 - (1 + r2) ** 1.5 * A
    return TailBounds(n, r, A, B, C, used)


def tail_A(n: int, r: float) -> float:
    return tail_bounds(n, r).A


def tail_B(n: int, r: float) -> float:
    return tail_bounds(n, r).B


def tail_AB_closed_form(r: float) -> float:
    """Closed form of ``A(4, r) + B(4, r)``, an upper bound for every ``n >= 4``.

    The full series from ``k = 1`` sums to ``(1 + 2r^2) / (1 - r^2)^(5/2)``;
    the first four terms are subtracted.
    """
    _check_radius(r)
    r2 = r * r
    head = 1 + 4.5 * r2 + 75 / 8 * r2 ** 2 + 245 / 16 * r2 ** 3
    return (1 + 2 * r2) / (1 - r2) ** 2.5 - head


def tail_threshold() -> float:
    """``27 / (7 * 11**1.5)``: the value ``A + B`` must stay below at ``r = sqrt(2)/3``."""
    return 27 / (7 * 11 ** 1.5)


def general_case_lhs(n: int, r: float) -> float:
    """Left side ``(1+r^2)^(3/2) (3r^2 A + (1-r^2) B) / C``; ``inf`` when ``C <= 0``."""
    t = tail_bounds(n, r)
    if t.C <= 0:
        return math.inf
    r2 = r * r
    return (1 + r2) ** 1.5 * (3 * r2 * t.A + (1 - r2) * t.B) / t.C


def general_case_inequality(n: int, r: float) -> bool:
    """Sufficient condition for convexity of ``s_{2n-1}`` on ``|z| = r`` (n >= 4)."""
    if n < 4:
        raise ValueError(f"the tail argument needs n >= 4, got {n}")
    _check_radius(r)
    return general_case_lhs(n, r) < 1 - 4 * r * r


def curvature_lower_bound(n: int, r: float) -> float:
    """Lower bound on ``Re(1 + z s'' / s')`` on ``|z| = r`` from the tail estimates."""
    t = tail_bounds(n, r)
    L = log_deriv_bound(r)
    lo, _ = distortion_bounds(r)
    if lo - t.A <= 0:
        return -math.inf
    return 1 - L - (L * t.A + t.B) / (lo - t.A)


def truncation_order(r: float, eps: float, start: int = 1) -> int:
    """Smallest ``N >= start`` with ``A(N, r) + B(N, r) < eps``."""
    _check_radius(r)
    n = start
    while True:
        t = tail_bounds(n, r)
        if t.A + t.B < eps:
            return n
        n += 1
