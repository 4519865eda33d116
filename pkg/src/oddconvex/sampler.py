"""Members of the class generated from finite even Herglotz measures.

A measure with atoms ``(lambda_j, x_j)`` defines the Caratheodory function
``q(w) = sum_j lambda_j (1 + x_j w) / (1 - x_j w)``; setting ``p(z) = q(z^2)``
and solving ``1 + (2/3) z f''/f' = p`` for an odd ``f`` yields a member.  Only
this finite-atom subclass is sampled.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import tail_bounds
from .curvature import DEFAULT_GRID, derivative_zero_count, min_curvature_on_circle
from .errors import ConfigurationError, DomainError
from .series import OddSeries, SectionPoly

MEMBERSHIP_TAIL = 1e-8
MEMBERSHIP_SLACK = 1e-6


@dataclass(frozen=True)
class HerglotzMeasure:
    atoms: tuple  # ((weight, point), ...)

    def __post_init__(self):
        atoms = tuple((w, x) for w, x in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise DomainError("a measure needs at least one atom")
        if any(w < 0 for w, _ in atoms):
            raise DomainError("weights must be nonnegative")
        if abs(sum(complex(w) for w, _ in atoms) - 1) > 1e-12:
            raise DomainError("weights must sum to 1")
        if any(abs(abs(complex(x)) - 1) > 1e-12 for _, x in atoms):
            raise DomainError("atoms must lie on the unit circle")

    @property
    def is_exact(self) -> bool:
        """Rational weights at the real roots of unity +1 and -1."""
        return all(isinstance(w, (int, Fraction)) and isinstance(x, (int, Fraction)) and x in (1, -1)
                   for w, x in self.atoms)

    def rotated(self, angle: float) -> "HerglotzMeasure":
        rot = complex(math.cos(angle), math.sin(angle))
        return HerglotzMeasure(tuple((w, complex(x) * rot) for w, x in self.atoms))


@dataclass(frozen=True)
class CaratheodorySeq:
    p_even: tuple  # p_2, p_4, ..., p_{2(n_max-1)}

    def __post_init__(self):
        object.__setattr__(self, "p_even", tuple(self.p_even))
        if any(abs(complex(p)) > 2 + 1e-10 for p in self.p_even):
            raise DomainError("Caratheodory coefficients satisfy |p_n| <= 2")


def delta(point=1) -> HerglotzMeasure:
    """Unit point mass, exact when ``point`` is +1 or -1."""
    return HerglotzMeasure(((Fraction(1), point),))


def p_even_from_measure(m: HerglotzMeasure, n_max: int) -> CaratheodorySeq:
    """``p_{2k} = 2 sum_j lambda_j x_j^k`` for ``k = 1 .. n_max - 1``."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    if m.is_exact:
        return CaratheodorySeq(tuple(2 * sum(Fraction(w) * Fraction(x) ** k for w, x in m.atoms)
                                     for k in range(1, n_max)))
    w = np.array([complex(a) for a, _ in m.atoms])
    x = np.array([complex(b) for _, b in m.atoms])
    k = np.arange(1, n_max)
    p = 2 * (w[None, :] * x[None, :] ** k[:, None]).sum(axis=1)
    return CaratheodorySeq(tuple(complex(v) for v in p))


def build_member(p: CaratheodorySeq, n_max: int) -> OddSeries:
    """Solve ``(2n-1)(2n-2) a_{2n-1} = (3/2) sum_k p_{2k} (2n-2k-1) a_{2n-2k-1}``."""
    if len(p.p_even) < n_max - 1:
        raise ValueError(f"need {n_max - 1} coefficients p_2k, got {len(p.p_even)}")
    exact = all(isinstance(v, (int, Fraction)) for v in p.p_even[: n_max - 1])
    a = [Fraction(1) if exact else 1.0 + 0j]
    half3 = Fraction(3, 2) if exact else 1.5
    for n in range(2, n_max + 1):
        acc = 0
        for k in range(1, n):
            m = n - k  # a_{2m-1} with 2m - 1 = 2n - 2k - 1
            acc += p.p_even[k - 1] * (2 * m - 1) * a[m - 1]
        a.append(half3 * acc / ((2 * n - 1) * (2 * n - 2)))
    if not exact and all(abs(c.imag) == 0 for c in a):
        a = [c.real for c in a]
        a[0] = 1
    elif not exact:
        a[0] = 1
    return OddSeries(tuple(a))


def member_from_measure(m: HerglotzMeasure, n_max: int) -> OddSeries:
    return build_member(p_even_from_measure(m, n_max), n_max)


def random_measure(seed: int, atom_count: int) -> HerglotzMeasure:
    """Deterministic pseudo-random measure: Dirichlet weights, uniform angles."""
    if atom_count < 1:
        raise ValueError(f"atom_count must be positive, got {atom_count}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(atom_count))
    weights = weights / weights.sum()
    angles = rng.uniform(0.0, 2 * np.pi, atom_count)
    return HerglotzMeasure(tuple((float(w), complex(math.cos(t), math.sin(t)))
                                 for w, t in zip(weights, angles)))


def sample_members(seed: int, count: int, n_max: int, max_atoms: int = 5):
    """``count`` members keyed by consecutive seeds ``seed, seed + 1, ...``.

    The atom count for each seed is drawn from its own generator, so a given
    seed always produces the same member regardless of ``count``.
    """
    for s in range(seed, seed + count):
        atoms = int(np.random.default_rng([s, 1]).integers(1, max_atoms + 1))
        m = random_measure(s, atoms)
        yield s, m, member_from_measure(m, n_max)


def validate_membership(f: OddSeries, r_test: float, grid: int = DEFAULT_GRID,
                        polynomial: bool = False) -> bool:
    """Check the defining conditions of the class on ``|z| <= r_test``.

    ``f'`` must have no zeros inside the circle (local univalence, via the
    argument principle) and ``Re(1 + z f''/f') > -1/2`` on the circle; the
    latter extends to the disk because the functional is harmonic there.
    Unless ``polynomial`` is set the coefficients are treated as a truncation,
    and ``n_max`` must make the coefficient-bound tail majorant negligible.
    """
    if not 0 < r_test <= 0.9:
        raise ValueError(f"r_test must lie in (0, 0.9], got {r_test}")
    if not polynomial:
        t = tail_bounds(f.n_max, r_test)
        if t.A + t.B >= MEMBERSHIP_TAIL:
            raise ConfigurationError(
                f"n_max={f.n_max} too small for r_test={r_test}: tail majorant {t.A + t.B:.3g}")
    poly = SectionPoly(f.coeffs)
    if derivative_zero_count(poly, r_test, grid) != 0:
        return False
    return min_curvature_on_circle(poly, r_test, grid).min_value > -0.5 - MEMBERSHIP_SLACK
