"""Schematic SVG figures: curve in blue, component ellipses in green, axes in red."""
from __future__ import annotations

import math

import numpy as np

from .geometry import SymmetryGroup
from .trig_curve import TrigCurve, evaluate


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _path(points: np.ndarray, closed: bool = True) -> str:
    # y is flipped so the picture is y-up
    cmds = [f"{'M' if i == 0 else 'L'}{_fmt(x)},{_fmt(-y)}" for i, (x, y) in enumerate(points)]
    return " ".join(cmds) + (" Z" if closed else "")


def curve_samples(c: TrigCurve) -> np.ndarray:
    n = max(512, 32 * c.degree)
    return evaluate(c, 2.0 * np.pi * np.arange(n) / n)


def render(
    curve: TrigCurve | None = None,
    polyline: np.ndarray | None = None,
    group: SymmetryGroup | None = None,
    harmonics: int = 0,
    width: int = 480,
) -> str:
    """SVG 1.1 document; deterministic for fixed input."""
    layers: list[str] = []
    extent = []
    if curve is not None:
        samples = curve_samples(curve)
        extent.append(samples)
        t = 2.0 * np.pi * np.arange(256) / 256
        for k in range(1, min(harmonics, curve.degree) + 1):
            ak, bk = curve.harmonic(k)
            ell = curve.a0 + np.outer(np.cos(t), ak) + np.outer(np.sin(t), bk)
            extent.append(ell)
            layers.append(f'<path class="harmonic" data-k="{k}" d="{_path(ell)}" fill="none" stroke="green" stroke-width="{{sw}}"/>')
        layers.append(f'<path class="curve" d="{_path(samples)}" fill="none" stroke="blue" stroke-width="{{sw}}"/>')
    if polyline is not None:
        poly = np.asarray(polyline, dtype=float)
        extent.append(poly)
        layers.insert(0, f'<path class="polyline" d="{_path(poly)}" fill="none" stroke="gray" stroke-width="{{sw}}"/>')
    if not extent:
        raise ValueError("nothing to render")
    pts = np.vstack(extent)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    size = max(float(np.max(hi - lo)), 1e-12)
    margin = 0.05 * size
    lo, hi = lo - margin, hi + margin
    diag = float(np.hypot(*(hi - lo)))
    sw = _fmt(0.004 * diag)

    if group is not None:
        cx, cy = group.center
        for ang in group.axes:
            dx, dy = diag * math.cos(ang), diag * math.sin(ang)
            layers.append(
                f'<line class="axis" x1="{_fmt(cx - dx)}" y1="{_fmt(-(cy - dy))}" '
                f'x2="{_fmt(cx + dx)}" y2="{_fmt(-(cy + dy))}" stroke="red" stroke-width="{{sw}}"/>'
            )
        layers.append(f'<circle class="center" cx="{_fmt(cx)}" cy="{_fmt(-cy)}" r="{_fmt(0.01 * diag)}" fill="red"/>')

    w, h = hi - lo
    height = max(1, int(round(width * h / w))) if w > 0 else width
    body = "\n  ".join(layer.replace("{sw}", sw) for layer in layers)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{_fmt(lo[0])} {_fmt(-hi[1])} {_fmt(w)} {_fmt(h)}">\n'
        f'  <defs><clipPath id="frame"><rect x="{_fmt(lo[0])}" y="{_fmt(-hi[1])}" width="{_fmt(w)}" height="{_fmt(h)}"/></clipPath></defs>\n'
        f'  <g clip-path="url(#frame)">\n  {body}\n  </g>\n'
        "</svg>\n"
    )
