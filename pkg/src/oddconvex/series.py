"""Odd Taylor series, their sections, and a vectorised evaluation kernel.

Index convention: the k-th stored coefficient (1-based) is the coefficient of
``z**(2k - 1)``.  In Python's 0-based tuples this means ``coeffs[k - 1]`` holds
``a_{2k-1}``, so ``coeffs[0]`` is always the normalisation ``a_1 = 1``.

Coefficients are kept exactly as given (``Fraction`` where possible) and are
only converted to floating point when a series is evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Number
from typing import Sequence

import numpy as np

from .errors import ConfigurationError

MAX_COEFFICIENTS = 10_000


def _check_normalised(coeffs: tuple) -> None:
    if len(coeffs) < 1:
        raise ValueError("an odd series needs at least the leading coefficient")
    if coeffs[0] != 1:
        raise ValueError(f"leading coefficient must be exactly 1, got {coeffs[0]!r}")
    for c in coeffs:
        if not isinstance(c, Number):
            raise TypeError(f"coefficient {c!r} is not a number")
        if not np.isfinite(complex(c)):
            raise ValueError("coefficients must be finite")


class _OddPolynomialMixin:
    coeffs: tuple

    @cached_property
    def numeric(self) -> np.ndarray:
        """Complex floating-point copy of the coefficients."""
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __call__(self, z):
        return eval012(self, z)[0]


@dataclass(frozen=True)
class OddSeries(_OddPolynomialMixin):
    """Leading coefficients ``[a_1, a_3, a_5, ...]`` of an odd normalised function."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        _check_normalised(self.coeffs)

    @property
    def n_max(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int):
        """Return ``a_{2k-1}`` (``k`` is 1-based)."""
        if not 1 <= k <= self.n_max:
            raise IndexError(f"k={k} outside 1..{self.n_max}")
        return self.coeffs[k - 1]


@dataclass(frozen=True)
class SectionPoly(_OddPolynomialMixin):
    """The partial sum ``s_{2n-1}``: an odd polynomial of degree ``2n - 1``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        _check_normalised(self.coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return 2 * self.n - 1


IDENTITY = SectionPoly((1,))


def f0_coefficients(n_max: int) -> OddSeries:
    """Coefficients of ``z / sqrt(1 - z**2)``.

    Built from the binomial series of ``(1 - w)**(-1/2)`` by the ratio
    ``c_{k+1} / c_k = (2k - 1) / (2k)``; every entry is an exact ``Fraction``.
    """
    if not isinstance(n_max, (int, np.integer)) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    if n_max > MAX_COEFFICIENTS:
        raise ConfigurationError(f"n_max={n_max} exceeds the limit {MAX_COEFFICIENTS}")
    coeffs = [Fraction(1)]
    for k in range(1, int(n_max)):
        coeffs.append(coeffs[-1] * Fraction(2 * k - 1, 2 * k))
    return OddSeries(tuple(coeffs))


def section(series: OddSeries, n: int) -> SectionPoly:
    if n < 1 or n > series.n_max:
        raise IndexError(f"section index n={n} outside 1..{series.n_max}")
    return SectionPoly(series.coeffs[:n])


def odd_poly(coeffs: Sequence) -> SectionPoly:
    """Convenience constructor: ``odd_poly([1, Fraction(1, 2)])`` is ``z + z**3/2``."""
    return SectionPoly(tuple(coeffs))


def eval012(poly, z):
    """Evaluate ``p(z)``, ``p'(z)`` and ``p''(z)`` in one Horner pass.

    Writing ``p(z) = z q(w)`` with ``w = z**2`` gives
    ``p' = q + 2 w q'`` and ``p'' = z (6 q' + 4 w q'')``, so only the
    ``n`` coefficients of ``q`` are visited.  ``z`` may be a scalar or an array.
    """
    c = poly.numeric
    z = np.asarray(z, dtype=complex)
    w = z * z
    q = np.full_like(w, c[-1])
    dq = np.zeros_like(w)
    d2q = np.zeros_like(w)
    for a in c[-2::-1]:
        d2q = d2q * w + 2 * dq
        dq = dq * w + q
        q = q * w + a
    value = z * q
    d1 = q + 2 * w * dq
    d2 = z * (6 * dq + 4 * w * d2q)
    if value.ndim == 0:
        return complex(value), complex(d1), complex(d2)
    return value, d1, d2
