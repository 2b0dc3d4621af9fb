"""Print the detected group for the named example curves and fixtures."""
from __future__ import annotations

import argparse
import json
import math

import numpy as np

from symcurve import TrigCurve, detect, detect_symmetry_group, prune_collinear
from symcurve.shapes import cardioid, deltoid, orbit_polyline, random_arc, regular_polygon, two_ellipse_curve
from symcurve.symmetry import ellipse_vertex_grid, rytz_vertex_parameter


def curve_rows():
    seven = TrigCurve.from_cycloid((0, 0), [(1, 1.0, 0.0, 1), (6, 0.3, 1.1, -1), (8, 0.2, 2.9, 1)])
    for name, c in [("two-ellipse", two_ellipse_curve()), ("deltoid", deltoid()), ("cardioid", cardioid()), ("seven-fold", seven)]:
        res = detect_symmetry_group(c)
        yield {
            "curve": name,
            "group": res.group.name,
            "axes": [round(a, 10) for a in res.group.axes],
            "syzygy": [round(t, 10) for t in res.syzygy_parameters],
            "md": res.md,
            "branch": res.branch,
        }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    args = p.parse_args(argv)

    rows = list(curve_rows())
    c = two_ellipse_curve()
    for k in (1, 2):
        a, b = c.harmonic(k)
        grid = ellipse_vertex_grid(rytz_vertex_parameter(a, b, k), k)
        rows.append({"curve": f"two-ellipse p{k} vertex grid / pi", "grid": [round(t / math.pi, 10) for t in grid]})
    rng = np.random.default_rng(4)
    c4 = prune_collinear(orbit_polyline(random_arc(rng, 2, math.pi / 2), 4, False))
    for name, poly in [("regular 5-gon", prune_collinear(regular_polygon(5))), ("C4 8-gon", c4)]:
        rep = detect(poly)
        rows.append({
            "curve": name,
            "group": rep.group.name,
            "interpolant": rep.interpolant_group.name,
            "rejected": rep.rejected_candidates,
        })
    for row in rows:
        print(json.dumps(row) if args.json else "  ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
