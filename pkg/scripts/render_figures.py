"""Write SVG figures of the example curves, their component ellipses and mirror axes."""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from symcurve import TrigCurve, detect, detect_symmetry_group, filtered_interpolants, interpolant, prune_collinear
from symcurve.shapes import cardioid, deltoid, orbit_polyline, random_arc, two_ellipse_curve
from symcurve.svg import render


@dataclass
class FigureConfig:
    out: Path = Path("figures")
    seed: int = 3
    width: int = 480


def figures(cfg: FigureConfig):
    seven = TrigCurve.from_cycloid((0, 0), [(1, 1.0, 0.0, 1), (6, 0.3, 1.1, -1), (8, 0.2, 2.9, 1)])
    for name, c, harmonics in [("two_ellipse", two_ellipse_curve(), 2), ("deltoid", deltoid(), 0), ("cardioid", cardioid(), 0), ("seven_fold", seven, 0)]:
        yield name, render(curve=c, group=detect_symmetry_group(c).group, harmonics=harmonics, width=cfg.width)

    rng = np.random.default_rng(cfg.seed)
    poly = prune_collinear(orbit_polyline(random_arc(rng, 6, math.pi / 3), 3, True))
    yield "d3_polyline", render(curve=interpolant(poly), polyline=poly.vertices, group=detect(poly).group, width=cfg.width)
    chain = filtered_interpolants(poly, interpolant(poly).degree - 1)
    for ell in (0, len(chain) // 2, len(chain) - 1):
        T = chain[ell]
        yield f"d3_filtered_{ell:02d}", render(curve=T, group=detect_symmetry_group(T).group, width=cfg.width)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=FigureConfig.out)
    p.add_argument("--seed", type=int, default=FigureConfig.seed)
    p.add_argument("--width", type=int, default=FigureConfig.width)
    cfg = FigureConfig(**vars(p.parse_args(argv)))
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, svg in figures(cfg):
        path = cfg.out / f"{name}.svg"
        path.write_text(svg)
        print(path)


if __name__ == "__main__":
    main()
