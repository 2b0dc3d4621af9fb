"""Trigonometric interpolation of ordered planar points at uniform nodes."""
from __future__ import annotations

import numpy as np

from .geometry import DegenerateError, as_points
from .trig_curve import TrigCurve


def nodes(n: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(n) / n


def interpolation_coefficients(points) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Raw discrete Fourier coefficients (a0, a, b), untrimmed.

    For odd n = 2N + 1 every a_k, b_k is (2/n) sum x_j cos/sin(k t_j). For
    even n = 2N the top cosine coefficient uses 1/n and b_N is set to zero.
    """
    pts = as_points(points)
    n = len(pts)
    if n < 3:
        raise DegenerateError(f"too few points: need at least 3, got {n}")
    N = n // 2
    t = nodes(n)
    ks = np.arange(1, N + 1)
    phase = np.outer(ks, t)
    a = (2.0 / n) * (np.cos(phase) @ pts)
    b = (2.0 / n) * (np.sin(phase) @ pts)
    if n % 2 == 0:
        a[N - 1] *= 0.5
        b[N - 1] = 0.0
    return pts.mean(axis=0), a, b


def trig_interpolate(points) -> TrigCurve:
    return TrigCurve(*interpolation_coefficients(points))
