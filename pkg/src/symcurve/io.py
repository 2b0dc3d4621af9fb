"""CSV point lists and JSON curve files."""
from __future__ import annotations

import json
import warnings
from pathlib import Path

import numpy as np

from .trig_curve import TrigCurve, from_dict, to_dict


def read_points(path) -> np.ndarray:
    """``x,y`` per line, ``#`` starts a comment; file order is vertex order."""
    with warnings.catch_warnings():
        warnings.simplefilter("error")  # empty input should fail, not warn
        try:
            pts = np.loadtxt(path, delimiter=",", comments="#", ndmin=2, dtype=float)
        except UserWarning as exc:
            raise ValueError(f"{path}: no points") from exc
    if pts.shape[1] != 2:
        raise ValueError(f"{path}: expected 2 columns, got {pts.shape[1]}")
    if not np.all(np.isfinite(pts)):
        raise ValueError(f"{path}: non-finite coordinate")
    return pts


def write_points(path, points) -> None:
    pts = np.asarray(points, dtype=float)
    lines = [f"{x!r},{y!r}" for x, y in pts.tolist()]
    Path(path).write_text("\n".join(lines) + "\n")


def read_curve(path) -> TrigCurve:
    with open(path) as fh:
        return from_dict(json.load(fh))


def write_curve(path, c: TrigCurve) -> None:
    Path(path).write_text(json.dumps(to_dict(c), indent=2) + "\n")
