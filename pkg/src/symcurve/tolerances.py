"""Numerical thresholds shared by the detection pipeline.

All values are relative: coefficient tests scale with the largest harmonic
norm of the curve, geometric tests with the bounding-box diagonal of the
input points.
"""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass, replace

ENV_MULTIPLIER = "SYMCURVE_TOL"


@dataclass(frozen=True)
class Tolerances:
    coef: float = 1e-9  # zero / circle / coefficient-identity tests, times curve scale
    geom: float = 1e-9  # collinearity and duplicate collapse, times bbox diagonal
    match: float = 1e-8  # vertex matching of candidate symmetries, times bbox diagonal
    hausdorff: float = 1e-6  # cloud confirmation threshold, times bbox diagonal
    angle: float = 1e-7  # parameter matching across vertex grids / syzygy pairs

    def scaled(self, factor: float) -> "Tolerances":
        if not factor > 0:
            raise ValueError(f"tolerance multiplier must be positive, got {factor}")
        return Tolerances(**{k: v * factor for k, v in asdict(self).items()})

    def with_overrides(self, **kwargs) -> "Tolerances":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_env(cls) -> "Tolerances":
        raw = os.environ.get(ENV_MULTIPLIER)
        if not raw:
            return cls()
        return cls().scaled(float(raw))


DEFAULT = Tolerances()
