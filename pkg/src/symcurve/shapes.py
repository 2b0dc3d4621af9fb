"""Worked example curves and orbit constructions with planted symmetry groups."""
from __future__ import annotations

import math

import numpy as np

from .geometry import Isometry2, apply
from .trig_curve import TrigCurve


def two_ellipse_curve() -> TrigCurve:
    """[sin t + 2 sin 2t + cos t, 2 sin t - 2 cos t - cos 2t]; mirror axis y = 0."""
    return TrigCurve.from_harmonics(
        (0.0, 0.0),
        {1: ((1.0, -2.0), (1.0, 2.0)), 2: ((0.0, -1.0), (2.0, 0.0))},
    )


def deltoid() -> TrigCurve:
    """2 e^{it} + e^{-2it}."""
    return TrigCurve.from_harmonics((0.0, 0.0), {1: ((2.0, 0.0), (0.0, 2.0)), 2: ((1.0, 0.0), (0.0, -1.0))})


def cardioid() -> TrigCurve:
    """2 e^{it} + e^{2it}: one mirror axis."""
    return TrigCurve.from_harmonics((0.0, 0.0), {1: ((2.0, 0.0), (0.0, 2.0)), 2: ((1.0, 0.0), (0.0, 1.0))})


def regular_polygon(n: int, radius: float = 1.0, phase: float = 0.0, center=(0.0, 0.0)) -> np.ndarray:
    t = phase + 2.0 * np.pi * np.arange(n) / n
    return np.asarray(center, dtype=float) + radius * np.column_stack([np.cos(t), np.sin(t)])


def random_arc(rng: np.random.Generator, count: int, span: float, r_lo=0.4, r_hi=1.0) -> np.ndarray:
    """``count`` points at sorted random angles in (0, span) with random radii."""
    # one angle per stratum keeps neighbours apart and the ordering monotone
    ang = span * (0.05 + 0.9 * (np.arange(count) + rng.uniform(0.1, 0.9, count)) / count)
    rad = rng.uniform(r_lo, r_hi, count)
    return np.column_stack([rad * np.cos(ang), rad * np.sin(ang)])


def orbit_polyline(arc: np.ndarray, m: int, dihedral: bool) -> np.ndarray:
    """Closed polyline with planted C_m or D_m (about the origin, mirror y = 0).

    For C_m the arc should live in the wedge (0, 2pi/m); for D_m in (0, pi/m),
    and it is completed by its mirror image before rotating.
    """
    arc = np.asarray(arc, dtype=float)
    if dihedral:
        mirrored = arc[::-1] * np.array([1.0, -1.0])
        piece = np.vstack([mirrored, arc])
    else:
        piece = arc
    parts = [apply(Isometry2.rotation(2.0 * math.pi * j / m), piece) for j in range(m)]
    return np.vstack(parts)


def planted_polyline(rng: np.random.Generator, m: int, dihedral: bool, arc_len: int) -> np.ndarray:
    span = math.pi / m if dihedral else 2.0 * math.pi / m
    return orbit_polyline(random_arc(rng, arc_len, span), m, dihedral)


def random_isometry(rng: np.random.Generator, shift: float = 5.0) -> Isometry2:
    angle = rng.uniform(0, 2 * math.pi)
    t = rng.uniform(-shift, shift, 2)
    if rng.random() < 0.5:
        return Isometry2(Isometry2.rotation(angle).matrix, t)
    return Isometry2(Isometry2.reflection(angle).matrix, t)
