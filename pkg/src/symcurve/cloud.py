"""Symmetries of unorganized point clouds through the convex hull boundary."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import directed_hausdorff

from .geometry import DegenerateError, Isometry2, SymmetryGroup, apply, as_points, bbox_diagonal, largest_subgroup
from .discrete import DiscreteCurve, interpolant
from .report import SymmetryReport
from .symmetry import detect_symmetry_group
from .tolerances import DEFAULT, Tolerances


def collapse_duplicates(points, tol: float = DEFAULT.geom) -> np.ndarray:
    """Keep the first point of every cluster closer than tol * bbox diagonal."""
    pts = as_points(points)
    if len(pts) == 0:
        return pts
    eps = tol * bbox_diagonal(pts)
    tree = cKDTree(pts)
    keep = np.ones(len(pts), dtype=bool)
    for i, j in sorted(tree.query_pairs(eps)):
        if keep[i]:
            keep[j] = False
    return pts[keep]


@dataclass(frozen=True, eq=False)
class PointCloud:
    points: np.ndarray

    def __post_init__(self):
        pts = collapse_duplicates(self.points)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def transformed(self, iso: Isometry2) -> "PointCloud":
        return PointCloud(apply(iso, self.points))


def _cloud_points(x) -> np.ndarray:
    return x.points if isinstance(x, PointCloud) else PointCloud(x).points


def convex_hull(x, tol: float = DEFAULT.geom) -> DiscreteCurve:
    """Counterclockwise strictly convex boundary of the hull (monotone chain).

    Turns whose cross product is within tol * diag^2 of zero count as straight,
    so collinear boundary points are dropped.
    """
    pts = _cloud_points(x)
    if len(pts) < 3:
        raise DegenerateError("degenerate hull: fewer than 3 distinct points")
    eps = tol * bbox_diagonal(pts) ** 2
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    p = pts[order]

    def chain(seq):
        out: list[np.ndarray] = []
        for q in seq:
            while len(out) >= 2:
                u, w = out[-1] - out[-2], q - out[-2]
                if u[0] * w[1] - u[1] * w[0] <= eps:
                    out.pop()
                else:
                    break
            out.append(q)
        return out

    lower = chain(p)
    upper = chain(p[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateError("degenerate hull: points are collinear")
    return DiscreteCurve(np.array(hull))


def hausdorff(x, y) -> float:
    """Symmetric Hausdorff distance between two finite point sets."""
    a = as_points(x)
    b = as_points(y)
    if len(a) == 0 or len(b) == 0:
        raise ValueError("Hausdorff distance of an empty set")
    return max(directed_hausdorff(a, b)[0], directed_hausdorff(b, a)[0])


def detect_cloud(x, tol: Tolerances = DEFAULT) -> SymmetryReport:
    """Interpolant symmetries of the hull boundary, kept only if they fix the cloud."""
    pts = _cloud_points(x)
    hull = convex_hull(pts, tol.geom)
    T = interpolant(hull)
    res = detect_symmetry_group(T, tol)
    notes = list(res.notes)
    if res.group.kind == "O2":
        v0 = hull.vertices[0] - T.a0
        candidates = SymmetryGroup.dihedral(len(hull), T.a0, math.atan2(v0[1], v0[0]))
        notes.append("hull interpolant is a circle: candidates are the regular polygon's D_n")
    else:
        candidates = res.group
    eps = tol.hausdorff * bbox_diagonal(pts)
    group, rejected, flags = largest_subgroup(candidates, lambda iso: hausdorff(pts, apply(iso, pts)) <= eps)
    if rejected:
        notes.append(f"{rejected} interpolant symmetries rejected by the Hausdorff test")
    if candidates.order <= 2:
        notes.append(f"candidate set is only {candidates.name}; hull may hide the cloud's structure")
    return SymmetryReport(
        input_kind="point_cloud",
        group=group,
        witnesses=group.generators(),
        interpolant_degree=T.degree,
        interpolant_group=res.group,
        rejected_candidates=rejected,
        syzygy_parameters=res.syzygy_parameters,
        tolerances=tol.as_dict(),
        notes=notes,
    )
