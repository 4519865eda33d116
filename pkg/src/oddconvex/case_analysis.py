"""Exact checks behind the sections ``s_3`` and ``s_5``.

``s_5`` is handled through the parametrisation ``a_3 = alpha/2`` and
``a_5 = 3(3 alpha^2 + 2 beta)/40`` with ``|alpha|, |beta| <= 1``, a bound
``T(x) > 5`` in ``x = Re(alpha)``, and a quartic ``phi`` whose positivity on
``[-1, 1]`` follows from a chain of monotone derivatives.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize

from .curvature import min_curvature_on_circle
from .errors import DomainError
from .report import Check, exact_equal, greater
from .series import odd_poly

F = Fraction


@dataclass(frozen=True)
class QuarticPhi:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    @property
    def coefficients(self) -> list[Fraction]:
        """Lowest degree first: ``[e, d, c, b, a]``."""
        return [self.e, self.d, self.c, self.b, self.a]


PHI = QuarticPhi(F(4435236), F(19446804), F(35311626), F(61078293, 2), F(169808041, 16))

# published values of the derivative cascade at x = -1
CASCADE_AT_MINUS_ONE = {
    3: F(10235160),
    2: F(7165260),
    1: F(5153625, 10),
    0: F(3739140625, 10000),
}


@dataclass(frozen=True)
class CaseThreeWitness:
    alpha: complex
    beta: complex

    def __post_init__(self):
        if abs(abs(self.alpha) - 1) > 1e-12 or abs(abs(self.beta) - 1) > 1e-12:
            raise DomainError("alpha and beta must lie on the unit circle")

    @classmethod
    def from_angles(cls, s: float, t: float) -> "CaseThreeWitness":
        return cls(complex(math.cos(s), math.sin(s)), complex(math.cos(t), math.sin(t)))

    @property
    def x(self) -> float:
        return min(1.0, max(-1.0, self.alpha.real))


# --- exact polynomial helpers (coefficient lists, lowest degree first) ---

def poly_eval(coeffs, x):
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_deriv(coeffs, times: int = 1):
    for _ in range(times):
        coeffs = [i * c for i, c in enumerate(coeffs)][1:] or [0]
    return coeffs


def poly_mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_add(*ps):
    n = max(len(p) for p in ps)
    out = [F(0)] * n
    for p in ps:
        for i, c in enumerate(p):
            out[i] += c
    return out


def poly_scale(p, s):
    return [s * c for c in p]


# --- s_3 ---

def a35_from_p(p2: complex, p4: complex) -> tuple[complex, complex]:
    """Coefficients ``a_3, a_5`` from the first two even Caratheodory coefficients."""
    if abs(p2) > 2 or abs(p4) > 2:
        raise DomainError("Caratheodory coefficients satisfy |p_n| <= 2")
    if all(isinstance(v, (int, Fraction)) for v in (p2, p4)):
        p2, p4 = F(p2), F(p4)
        return p2 / 4, F(3, 40) * (F(3, 4) * p2 * p2 + p4)
    return p2 / 4, 3 / 40 * (0.75 * p2 * p2 + p4)


def s3_bound_expression(r_squared: Fraction) -> Fraction:
    """``1 - 3 r^2 / (1 - (3/2) r^2)``: curvature lower bound for any ``s_3``."""
    r_squared = F(r_squared)
    return 1 - 3 * r_squared / (1 - F(3, 2) * r_squared)


@dataclass(frozen=True)
class SqrtRational:
    """The exact real number ``sqrt(square)``."""

    square: Fraction

    def __float__(self) -> float:
        return math.sqrt(self.square)


def s3_curvature_radius_bound() -> SqrtRational:
    """Positive root of ``1 - 3 r^2 / (1 - 3 r^2 / 2)``, i.e. ``sqrt(2)/3``.

    Clearing the denominator gives ``1 - (9/2) s = 0`` in ``s = r^2``.
    """
    s = 1 / (3 + F(3, 2))
    if s3_bound_expression(s) != 0:
        raise ArithmeticError("root substitution failed")
    return SqrtRational(s)


# --- s_5 ---

def case3_margin(w: CaseThreeWitness) -> float:
    a, b = w.alpha, w.beta
    return 1.5 * abs(81 + 27 * a + 4.5 * a * a + 3 * b) - abs(81 - 4.5 * a * a - 3 * b)


def case3_margin_grid(s, t):
    """Vectorised margin over angles ``alpha = e^{is}``, ``beta = e^{it}``."""
    a = np.exp(1j * np.asarray(s))
    b = np.exp(1j * np.asarray(t))
    return 1.5 * np.abs(81 + 27 * a + 4.5 * a * a + 3 * b) - np.abs(81 - 4.5 * a * a - 3 * b)


def case3_reduced_margin(alpha: complex) -> float:
    """``9|9 conj(alpha) + 3 + alpha/2| - 6|9 conj(alpha) - alpha/2| - 5``."""
    ac = alpha.conjugate()
    return 9 * abs(9 * ac + 3 + alpha / 2) - 6 * abs(9 * ac - alpha / 2) - 5


@dataclass(frozen=True)
class TorusScan:
    grid: int
    grid_min: float
    grid_argmin: tuple[float, float]
    min_value: float
    argmin: tuple[float, float]


def case3_torus_scan(grid: int = 720, refine: bool = True) -> TorusScan:
    """Minimum of :func:`case3_margin` over ``|alpha| = |beta| = 1``.

    Uniform ``grid x grid`` sampling of the two angles (row-major argmin, so the
    lexicographically smallest angle pair wins ties), then Nelder-Mead polish.
    """
    angles = 2 * np.pi * np.arange(grid) / grid
    values = case3_margin_grid(angles[:, None], angles[None, :])
    i, j = np.unravel_index(int(np.argmin(values)), values.shape)
    s0, t0 = float(angles[i]), float(angles[j])
    best = float(values[i, j])
    point = (s0, t0)
    if refine:
        res = minimize(lambda v: float(case3_margin_grid(v[0], v[1])), [s0, t0],
                       method="Nelder-Mead", options={"xatol": 1e-10, "fatol": 1e-12})
        if res.fun < best:
            best = float(res.fun)
            point = (float(res.x[0]) % (2 * np.pi), float(res.x[1]) % (2 * np.pi))
    return TorusScan(grid, float(values[i, j]), (s0, t0), best, point)


def s5_boundary_min(alpha: complex, beta: complex, grid: int = 4096) -> float:
    """Direct minimum of the curvature of ``z + a_3 z^3 + a_5 z^5`` on ``|z| = sqrt(2)/3``."""
    a3 = alpha / 2
    a5 = 3 / 40 * (3 * alpha * alpha + 2 * beta)
    return min_curvature_on_circle(odd_poly([1, a3, a5]), math.sqrt(2) / 3, grid).min_value


def T_eval(x):
    """``9 sqrt(18x^2 + 57x + 325/4) - 6 sqrt(361/4 - 18x^2)``; accepts arrays."""
    x = np.asarray(x, dtype=float)
    r1 = 18 * x * x + 57 * x + 81.25
    r2 = 90.25 - 18 * x * x
    if np.any(r1 < 0) or np.any(r2 < 0):
        raise DomainError("negative radicand; T is defined for -1 <= x <= 1")
    out = 9 * np.sqrt(r1) - 6 * np.sqrt(r2)
    return float(out) if out.ndim == 0 else out


def phi_eval(x, phi: QuarticPhi | None = None):
    phi = PHI if phi is None else phi
    return poly_eval(phi.coefficients, F(x) if isinstance(x, int) else x)


def phi_derivative_at(order: int, x, phi: QuarticPhi | None = None):
    phi = PHI if phi is None else phi
    return poly_eval(poly_deriv(phi.coefficients, order), x)


def phi_cascade_check(phi: QuarticPhi | None = None) -> list[Check]:
    """Monotone-derivative argument for ``phi > 0`` on ``[-1, 1]``, in exact arithmetic.

    ``phi''''`` is the constant ``24a``; if it is positive each lower derivative
    is increasing on ``[-1, 1]`` and positive at ``-1`` implies positive throughout.
    """
    phi = PHI if phi is None else phi
    checks = [greater("phi'''' = 24a > 0", phi_derivative_at(4, F(0), phi), F(0), "n=3 quartic cascade")]
    for order in (3, 2, 1, 0):
        value = phi_derivative_at(order, F(-1), phi)
        label = "phi" + "'" * order + "(-1)"
        checks.append(exact_equal(f"{label} exact value", value, CASCADE_AT_MINUS_ONE[order],
                                  "n=3 quartic cascade"))
        checks.append(greater(f"{label} > 0", value, F(0), "n=3 quartic cascade"))
    return checks


def squared_once() -> list[Fraction]:
    """``81 R1 - 25 - 36 R2`` with ``R1 = 18x^2+57x+325/4``, ``R2 = 361/4 - 18x^2``."""
    R1 = [F(325, 4), F(57), F(18)]
    R2 = [F(361, 4), F(0), F(-18)]
    return poly_add(poly_scale(R1, 81), [F(-25)], poly_scale(R2, -36))


def phi_expansion() -> list[Fraction]:
    """``(2106x^2 + 4617x + 13229/4)^2 - 3600 (361/4 - 18x^2)``, lowest degree first."""
    Q = squared_once()
    R2 = [F(361, 4), F(0), F(-18)]
    return poly_add(poly_mul(Q, Q), poly_scale(R2, -3600))


def phi_expansion_identity(phi: QuarticPhi | None = None) -> bool:
    phi = PHI if phi is None else phi
    first = squared_once() == [F(13229, 4), F(4617), F(2106)]
    second = phi_expansion() == phi.coefficients
    disc = F(57) ** 2 - 4 * 18 * F(325, 4)
    return first and second and disc < 0


def radicand_discriminant() -> Fraction:
    return F(57) ** 2 - 4 * 18 * F(325, 4)
