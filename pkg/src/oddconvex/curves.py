"""Curve data for the figures: CSV with ``#`` metadata lines, optional SVG."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .case_analysis import T_eval
from .curvature import curvature
from .series import f0_coefficients, section

KINDS = ("circle-image", "curvature-profile", "t-graph", "disk-image")


@dataclass
class CurveFile:
    kind: str
    params: np.ndarray
    x: np.ndarray
    y: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        self.params = np.asarray(self.params, dtype=float)
        self.x = np.asarray(self.x, dtype=float)
        self.y = np.asarray(self.y, dtype=float)
        if not (np.all(np.isfinite(self.x)) and np.all(np.isfinite(self.y))):
            raise ValueError("curve points must be finite")

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])


def circle_image(func, r: float, samples: int, kind: str = "circle-image", **meta) -> CurveFile:
    theta = 2 * np.pi * np.arange(samples) / samples
    w = func(r * np.exp(1j * theta))
    return CurveFile(kind, theta, w.real, w.imag, {"r": r, "samples": samples, **meta})


def s3_image(r: float = math.sqrt(2) / 3, samples: int = 1024) -> CurveFile:
    """Image of ``|z| = r`` under ``z + z^3/2``."""
    s3 = section(f0_coefficients(2), 2)
    return circle_image(s3, r, samples, function="s3,0")


def f0(z):
    return z / np.sqrt(1 - z * z)


def f0_image(r: float = 0.99, samples: int = 1024) -> CurveFile:
    """Image of ``|z| = r`` under ``z / sqrt(1 - z^2)``; approximates the boundary of the image of the disk."""
    return circle_image(f0, r, samples, kind="disk-image", function="f0")


def t_graph(samples: int = 1001) -> CurveFile:
    x = np.linspace(-1.0, 1.0, samples)
    return CurveFile("t-graph", x, x, T_eval(x), {"samples": samples})


def curvature_profile(n: int = 2, r: float = math.sqrt(2) / 3, samples: int = 1024) -> CurveFile:
    """``theta -> Re(1 + z s''/s')`` on ``|z| = r`` for the section ``n`` of ``f0``."""
    poly = section(f0_coefficients(n), n)
    theta = np.pi * np.arange(samples) / samples
    k = curvature(poly, r * np.exp(1j * theta))
    return CurveFile("curvature-profile", theta, theta, k, {"n": n, "r": r, "samples": samples})


def turning(points: np.ndarray) -> np.ndarray:
    """Signed turn at each vertex of a closed polyline (cross product of adjacent edges)."""
    e_in = points - np.roll(points, 1, axis=0)
    e_out = np.roll(points, -1, axis=0) - points
    return e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]


def curvature_sign_changes(curve: CurveFile, rtol: float = 1e-9) -> int:
    """Sign changes of the discrete curvature around a closed curve.

    Turns smaller than ``rtol`` times the largest turn count as zero and are skipped.
    """
    t = turning(curve.points)
    cutoff = rtol * np.max(np.abs(t))
    signs = np.sign(t[np.abs(t) > cutoff])
    if signs.size == 0:
        return 0
    return int(np.count_nonzero(signs != np.roll(signs, 1)))


def write_csv(curve: CurveFile, path) -> Path:
    path = Path(path)
    lines = [f"# kind: {curve.kind}"]
    lines += [f"# {k}: {v!r}" for k, v in curve.metadata.items()]
    lines.append("param,x,y")
    lines += [f"{p!r},{x!r},{y!r}" for p, x, y in zip(curve.params.tolist(), curve.x.tolist(), curve.y.tolist())]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_csv(path) -> CurveFile:
    kind, meta, rows = None, {}, []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(": ")
            if key == "kind":
                kind = value
            else:
                meta[key] = _literal(value)
        elif line and line != "param,x,y":
            rows.append([float(v) for v in line.split(",")])
    data = np.array(rows, dtype=float).reshape(-1, 3)
    return CurveFile(kind, data[:, 0], data[:, 1], data[:, 2], meta)


def _literal(text: str):
    import ast

    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def write_svg(curve: CurveFile, path, size: int = 480, closed: bool | None = None) -> Path:
    """Polyline rendering with a viewBox fitted to the data extents (y axis up)."""
    path = Path(path)
    closed = curve.kind in ("circle-image", "disk-image") if closed is None else closed
    x, y = curve.x, curve.y
    pad = 0.05 * max(np.ptp(x), np.ptp(y), 1e-12)
    x0, x1 = x.min() - pad, x.max() + pad
    y0, y1 = y.min() - pad, y.max() + pad
    pts = " ".join(f"{a:.6g},{-b:.6g}" for a, b in zip(x, y))
    tag = "polygon" if closed else "polyline"
    width = max(x1 - x0, y1 - y0) / 400
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{x0:.6g} {-y1:.6g} {x1 - x0:.6g} {y1 - y0:.6g}" preserveAspectRatio="xMidYMid meet">\n'
        f'  <{tag} points="{pts}" fill="none" stroke="black" stroke-width="{width:.3g}"/>\n'
        f"</svg>\n"
    )
    path.write_text(svg)
    return path
