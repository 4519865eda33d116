"""Structured pass/fail records."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

SCHEMA_VERSION = 1


def _fmt(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    return v


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: object
    bound: object
    tolerance: float = 0.0
    anchor: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "value": _fmt(self.value),
            "bound": _fmt(self.bound),
            "tolerance": self.tolerance,
            "anchor": self.anchor,
        }


@dataclass
class VerificationReport:
    scope: str = "all"
    checks: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "scope": self.scope,
            "status": self.status,
            "config": self.config,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def summary_lines(self):
        for c in self.checks:
            yield f"{c.status}  {c.name}: value={_fmt(c.value)} bound={_fmt(c.bound)}"
        yield f"{self.status}  {sum(c.passed for c in self.checks)}/{len(self.checks)} checks"


def exact_equal(name: str, value, expected, anchor: str = "") -> Check:
    return Check(name, value == expected, value, expected, 0.0, anchor)


def close(name: str, value: float, expected: float, tol: float, anchor: str = "") -> Check:
    return Check(name, abs(value - expected) <= tol, float(value), float(expected), tol, anchor)


def less(name: str, value, bound, anchor: str = "", tol: float = 0.0) -> Check:
    """``value < bound + tol`` (strict when ``tol == 0``)."""
    ok = value < bound + tol if tol == 0 else value <= bound + tol
    return Check(name, bool(ok), value, bound, tol, anchor)


def greater(name: str, value, bound, anchor: str = "", tol: float = 0.0) -> Check:
    ok = value > bound - tol if tol == 0 else value >= bound - tol
    return Check(name, bool(ok), value, bound, tol, anchor)
