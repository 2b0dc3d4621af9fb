"""Closed discrete curves (polylines) and their symmetry groups."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    DegenerateError,
    Isometry2,
    SymmetryGroup,
    apply,
    as_points,
    bbox_diagonal,
    group_from_elements,
    largest_subgroup,
)
from .interpolate import trig_interpolate
from .report import SymmetryReport
from .symmetry import detect_symmetry_group
from .tolerances import DEFAULT, Tolerances
from .trig_curve import TrigCurve, filter_harmonics


@dataclass(frozen=True, eq=False)
class DiscreteCurve:
    """Ordered vertices of a closed polyline; the closing edge v[n-1] -> v[0] is implicit.

    The constructor only checks n >= 3 and finiteness. Use
    :func:`prune_collinear` to get the collinear-free form that detection
    expects.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = as_points(self.vertices).copy()
        if len(v) < 3:
            raise DegenerateError(f"degenerate polyline: {len(v)} vertices")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def diagonal(self) -> float:
        return bbox_diagonal(self.vertices)

    def transformed(self, iso: Isometry2) -> "DiscreteCurve":
        return DiscreteCurve(apply(iso, self.vertices))


def prune_collinear(points, tol: float = DEFAULT.geom) -> DiscreteCurve:
    """Drop consecutive duplicates and middle vertices of collinear triples, cyclically."""
    pts = [np.asarray(p, dtype=float) for p in as_points(points)]
    eps = tol * bbox_diagonal(np.array(pts)) if pts else 0.0
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        i = 0
        while i < len(pts) and len(pts) >= 3:
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if np.linalg.norm(cur - prev) <= eps:
                del pts[i]
                changed = True
                continue
            chord = nxt - prev
            span = np.linalg.norm(chord)
            off = cur - prev
            dist = abs(chord[0] * off[1] - chord[1] * off[0]) / span if span > 0 else np.linalg.norm(off)
            if dist <= eps:
                del pts[i]
                changed = True
                continue
            i += 1
    if len(pts) < 3:
        raise DegenerateError("degenerate polyline: fewer than 3 vertices after pruning")
    return DiscreteCurve(np.array(pts))


def interpolant(c: DiscreteCurve) -> TrigCurve:
    """The trigonometric curve through the vertices at t_j = 2 pi j / n."""
    return trig_interpolate(c.vertices)


def match_vertices(iso: Isometry2, c: DiscreteCurve, tol: float = DEFAULT.match) -> tuple[int, int] | None:
    """(shift j, orientation o) with iso(v_i) = v_{j + o i} for all i, if any."""
    v = c.vertices
    n = len(v)
    eps = tol * c.diagonal
    image = apply(iso, v)
    hits = np.nonzero(np.linalg.norm(v - image[0], axis=1) <= eps)[0]
    idx = np.arange(n)
    for j in hits:
        for o in (1, -1):
            target = v[(j + o * idx) % n]
            if np.max(np.linalg.norm(image - target, axis=1)) <= eps:
                return int(j), o
    return None


def verify_on_vertices(iso: Isometry2, c: DiscreteCurve, tol: float = DEFAULT.match) -> bool:
    return match_vertices(iso, c, tol) is not None


def brute_force_symmetries(c: DiscreteCurve, tol: float = DEFAULT.match) -> list[tuple[Isometry2, int, int]]:
    """Every isometry mapping the vertex cycle onto itself, with its (shift, orientation).

    Each candidate is pinned down by where it sends the edge (v0, v1); both the
    direct and the indirect isometry doing so are tried. O(n^2).
    """
    v = c.vertices
    n = len(v)
    eps = tol * c.diagonal
    e0 = v[1] - v[0]
    len0 = float(np.linalg.norm(e0))
    ang0 = math.atan2(e0[1], e0[0])
    idx = np.arange(n)
    found: list[tuple[Isometry2, int, int]] = []
    for j in range(n):
        for o in (1, -1):
            e = v[(j + o) % n] - v[j]
            if abs(float(np.linalg.norm(e)) - len0) > eps:
                continue
            ang = math.atan2(e[1], e[0])
            for iso in (
                Isometry2.rotation(ang - ang0),
                Isometry2.reflection(0.5 * (ang + ang0)),
            ):
                iso = Isometry2(iso.matrix, v[j] - iso.matrix @ v[0])
                target = v[(j + o * idx) % n]
                if np.max(np.linalg.norm(apply(iso, v) - target, axis=1)) <= eps:
                    if not any(iso.isclose(f, 1e-7) for f, _, _ in found):
                        found.append((iso, j, o))
    return found


def brute_force_group(c: DiscreteCurve, tol: float = DEFAULT.match) -> SymmetryGroup:
    """Independent oracle: the exact vertex-cycle symmetry group by exhaustive search."""
    sym = brute_force_symmetries(c, tol)
    return group_from_elements((iso for iso, _, _ in sym), c.vertices.mean(axis=0))


def detect(c: DiscreteCurve, tol: Tolerances = DEFAULT) -> SymmetryReport:
    """Symmetries of the interpolant that also map the vertex cycle to itself."""
    T = interpolant(c)
    res = detect_symmetry_group(T, tol)
    notes = list(res.notes)
    if res.group.kind == "O2":
        v0 = c.vertices[0] - T.a0
        candidates = SymmetryGroup.dihedral(len(c), T.a0, math.atan2(v0[1], v0[0]))
        notes.append("interpolant is a circle: vertices form a regular polygon")
    else:
        candidates = res.group
    group, rejected, flags = largest_subgroup(candidates, lambda iso: verify_on_vertices(iso, c, tol.match))
    if rejected:
        n_rot = candidates.m
        lost_refl = sum(not f for f in flags[n_rot:])
        lost_rot = sum(not f for f in flags[:n_rot])
        notes.append(
            f"{rejected} interpolant symmetries rejected on vertices "
            f"({lost_rot} rotations, {lost_refl} reflections)"
        )
        if sum(flags) != group.order:
            notes.append("surviving elements were not closed; reported the largest subgroup")
    return SymmetryReport(
        input_kind="discrete_curve",
        group=group,
        witnesses=group.generators(),
        interpolant_degree=T.degree,
        interpolant_group=res.group,
        rejected_candidates=rejected,
        syzygy_parameters=res.syzygy_parameters,
        tolerances=tol.as_dict(),
        notes=notes,
    )


def laplacian_smooth(c: DiscreteCurve, lam: float, steps: int) -> DiscreteCurve:
    """Apply S = I - lam L ``steps`` times; vertex count is preserved."""
    if not 0.0 < lam < 1.0:
        raise ValueError(f"lambda must lie in (0, 1), got {lam}")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    v = np.array(c.vertices)
    for _ in range(steps):
        v = (1.0 - lam) * v + 0.5 * lam * (np.roll(v, 1, axis=0) + np.roll(v, -1, axis=0))
    return DiscreteCurve(v)


def smoothing_matrix(n: int, lam: float) -> np.ndarray:
    """The circulant S = I - lam L for n vertices."""
    L = np.eye(n)
    for i in range(n):
        L[i, i - 1] -= 0.5
        L[i, (i + 1) % n] -= 0.5
    return np.eye(n) - lam * L


def filtered_interpolants(c: DiscreteCurve, max_ell: int) -> list[TrigCurve]:
    """The interpolant with its top 0, 1, ..., max_ell harmonics dropped."""
    T = interpolant(c)
    if max_ell >= T.degree:
        raise DegenerateError("filtering would erase curve")
    return [filter_harmonics(T, ell) for ell in range(max_ell + 1)]
