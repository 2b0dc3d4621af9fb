"""Plane isometries and finite symmetry groups (cyclic, dihedral, O(2))."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

TWO_PI = 2.0 * math.pi


class DegenerateError(ValueError):
    """Input has no finite symmetry group to speak of (point, line, too few vertices)."""


def as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float).reshape(2)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite point {p!r}")
    return arr


def as_points(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1 and arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coordinates in point list")
    return arr


def bbox_diagonal(points) -> float:
    pts = np.asarray(points, dtype=float)
    if len(pts) == 0:
        return 0.0
    return float(np.hypot(*(pts.max(axis=0) - pts.min(axis=0))))


def wrap_angle(angle: float, period: float = TWO_PI) -> float:
    """Reduce to [0, period); values within 1e-15 of period collapse to 0."""
    a = math.fmod(angle, period)
    if a < 0:
        a += period
    if a >= period or period - a < 1e-15 * period:
        a = 0.0
    return a + 0.0  # no negative zero


def angle_distance(a: float, b: float, period: float = TWO_PI) -> float:
    d = wrap_angle(a - b, period)
    return min(d, period - d)


def _rotation_matrix(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def _reflection_matrix(axis_angle: float) -> np.ndarray:
    c, s = math.cos(2 * axis_angle), math.sin(2 * axis_angle)
    return np.array([[c, s], [s, -c]])


@dataclass(frozen=True, eq=False)
class Isometry2:
    """The map x -> matrix @ x + translation with an orthogonal matrix.

    Prefer the parametric constructors (:meth:`rotation`, :meth:`reflection`,
    ...) which are orthogonal by construction.
    """

    matrix: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        A = np.array(self.matrix, dtype=float).reshape(2, 2)
        b = as_point(self.translation)
        if not np.all(np.isfinite(A)):
            raise ValueError("non-finite isometry matrix")
        if np.max(np.abs(A.T @ A - np.eye(2))) > 1e-12:
            raise ValueError("matrix is not orthogonal")
        A.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "matrix", A)
        object.__setattr__(self, "translation", b)

    @classmethod
    def identity(cls) -> "Isometry2":
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def translation_by(cls, v) -> "Isometry2":
        return cls(np.eye(2), as_point(v))

    @classmethod
    def rotation(cls, angle: float, center=(0.0, 0.0)) -> "Isometry2":
        A = _rotation_matrix(angle)
        c = as_point(center)
        return cls(A, c - A @ c)

    @classmethod
    def reflection(cls, axis_angle: float, point=(0.0, 0.0)) -> "Isometry2":
        """Reflection across the line through ``point`` with direction ``axis_angle``."""
        A = _reflection_matrix(axis_angle)
        p = as_point(point)
        return cls(A, p - A @ p)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    @property
    def is_direct(self) -> bool:
        return self.det > 0

    def __call__(self, p):
        return apply(self, p)

    def describe(self, atol: float = 1e-12) -> dict:
        """Parameter form: kind plus center/point and angle."""
        A, b = self.matrix, self.translation
        if self.is_direct:
            angle = wrap_angle(math.atan2(A[1, 0], A[0, 0]))
            if angle_distance(angle, 0.0) <= atol:
                if np.linalg.norm(b) <= atol:
                    return {"kind": "identity", "center": None, "angle": 0.0}
                return {"kind": "translation", "vector": b.tolist()}
            center = np.linalg.solve(np.eye(2) - A, b)
            return {"kind": "rotation", "center": center.tolist(), "angle": angle}
        axis = wrap_angle(0.5 * math.atan2(A[1, 0], A[0, 0]), math.pi)
        u = np.array([math.cos(axis), math.sin(axis)])
        n = np.array([-u[1], u[0]])
        glide = float(b @ u)
        point = 0.5 * float(b @ n) * n
        out = {"kind": "reflection", "center": point.tolist(), "angle": axis}
        if abs(glide) > atol * max(1.0, float(np.linalg.norm(b))):
            out["kind"] = "glide_reflection"
            out["glide"] = glide
        return out

    def isclose(self, other: "Isometry2", atol: float = 1e-9) -> bool:
        scale = max(1.0, float(np.linalg.norm(self.translation)), float(np.linalg.norm(other.translation)))
        return bool(
            np.max(np.abs(self.matrix - other.matrix)) <= atol
            and np.max(np.abs(self.translation - other.translation)) <= atol * scale
        )

    def __repr__(self) -> str:
        d = self.describe(atol=1e-9)
        return f"Isometry2({', '.join(f'{k}={v}' for k, v in d.items())})"


def apply(iso: Isometry2, p) -> np.ndarray:
    """Image of a point (shape (2,)) or of a point array (shape (n, 2))."""
    pts = np.asarray(p, dtype=float)
    return pts @ iso.matrix.T + iso.translation


def compose(f: Isometry2, g: Isometry2) -> Isometry2:
    """f after g."""
    return Isometry2(f.matrix @ g.matrix, f.matrix @ g.translation + f.translation)


def invert(f: Isometry2) -> Isometry2:
    At = f.matrix.T
    return Isometry2(At, -At @ f.translation)


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True, eq=False)
class SymmetryGroup:
    """A finite subgroup C_m / D_m of Iso(R^2), or the circle group O(2).

    ``kind`` is ``"C"``, ``"D"`` or ``"O2"``. Dihedral groups carry the angle of
    one mirror axis, reduced to [0, pi/m) since the axis set repeats with that
    period.
    """

    kind: str
    m: int
    center: np.ndarray = field(default_factory=lambda: np.zeros(2))
    axis_angle: float | None = None

    def __post_init__(self):
        if self.kind not in ("C", "D", "O2"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        c = as_point(self.center)
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        if self.kind == "O2":
            object.__setattr__(self, "m", 0)
            object.__setattr__(self, "axis_angle", None)
            return
        if int(self.m) < 1:
            raise ValueError("group order m must be positive")
        object.__setattr__(self, "m", int(self.m))
        if self.kind == "D":
            if self.axis_angle is None:
                raise ValueError("dihedral group needs an axis angle")
            object.__setattr__(self, "axis_angle", wrap_angle(float(self.axis_angle), math.pi / self.m))
        else:
            object.__setattr__(self, "axis_angle", None)

    @classmethod
    def cyclic(cls, m: int, center=(0.0, 0.0)) -> "SymmetryGroup":
        return cls("C", m, center)

    @classmethod
    def dihedral(cls, m: int, center=(0.0, 0.0), axis_angle: float = 0.0) -> "SymmetryGroup":
        return cls("D", m, center, axis_angle)

    @classmethod
    def full_circle(cls, center=(0.0, 0.0)) -> "SymmetryGroup":
        return cls("O2", 0, center)

    @property
    def name(self) -> str:
        return "O2" if self.kind == "O2" else f"{self.kind}{self.m}"

    @property
    def order(self) -> float:
        if self.kind == "O2":
            return math.inf
        return self.m * (2 if self.kind == "D" else 1)

    @property
    def axes(self) -> list[float]:
        """Mirror axis angles in [0, pi), sorted."""
        if self.kind != "D":
            return []
        return sorted(wrap_angle(self.axis_angle + j * math.pi / self.m, math.pi) for j in range(self.m))

    def rotations(self) -> list[Isometry2]:
        if self.kind == "O2":
            raise ValueError("infinite group not enumerable")
        return [Isometry2.rotation(TWO_PI * j / self.m, self.center) for j in range(self.m)]

    def reflections(self) -> list[Isometry2]:
        if self.kind == "O2":
            raise ValueError("infinite group not enumerable")
        if self.kind == "C":
            return []
        return [
            Isometry2.reflection(self.axis_angle + j * math.pi / self.m, self.center)
            for j in range(self.m)
        ]

    def elements(self) -> list[Isometry2]:
        return self.rotations() + self.reflections()

    def contains(self, iso: Isometry2, atol: float = 1e-9) -> bool:
        if self.kind == "O2":
            scale = max(1.0, float(np.linalg.norm(self.center)))
            return bool(np.linalg.norm(apply(iso, self.center) - self.center) <= atol * scale)
        return any(iso.isclose(e, atol) for e in self.elements())

    def is_subgroup_of(self, other: "SymmetryGroup", atol: float = 1e-9) -> bool:
        if self.kind == "O2":
            return other.kind == "O2" and _centers_close(self.center, other.center, atol)
        return all(other.contains(e, atol) for e in self.elements())

    def conjugate(self, iso: Isometry2) -> "SymmetryGroup":
        """The group iso . G . iso^-1, i.e. the symmetry group of the image set."""
        center = apply(iso, self.center)
        if self.kind != "D":
            return SymmetryGroup(self.kind, self.m, center)
        u = np.array([math.cos(self.axis_angle), math.sin(self.axis_angle)])
        v = iso.matrix @ u
        return SymmetryGroup.dihedral(self.m, center, math.atan2(v[1], v[0]))

    def isclose(self, other: "SymmetryGroup", atol: float = 1e-9, angle_tol: float = 1e-9) -> bool:
        """Same kind and order, centers within ``atol``, axes equal modulo pi/m.

        C1 has no meaningful center, and the center of D1 may slide along its
        axis, so those two compare by what they actually fix.
        """
        if self.kind != other.kind or self.m != other.m:
            return False
        if self.kind == "C" and self.m == 1:
            return True
        if self.kind == "D":
            if angle_distance(self.axis_angle, other.axis_angle, math.pi / self.m) > angle_tol:
                return False
            if self.m == 1:
                u = np.array([math.cos(self.axis_angle), math.sin(self.axis_angle)])
                off = other.center - self.center
                return abs(u[0] * off[1] - u[1] * off[0]) <= atol * max(1.0, float(np.linalg.norm(self.center)))
        return _centers_close(self.center, other.center, atol)

    def generators(self) -> list[Isometry2]:
        """Generator rotation (if m > 1) followed by every reflection."""
        if self.kind == "O2":
            return []
        out = [Isometry2.rotation(TWO_PI / self.m, self.center)] if self.m > 1 else []
        return out + self.reflections()

    def __repr__(self) -> str:
        extra = f", axis={self.axis_angle:.12g}" if self.kind == "D" else ""
        return f"SymmetryGroup({self.name}, center={self.center.tolist()}{extra})"


def _centers_close(c1, c2, atol) -> bool:
    scale = max(1.0, float(np.linalg.norm(c1)), float(np.linalg.norm(c2)))
    return bool(np.linalg.norm(np.asarray(c1) - np.asarray(c2)) <= atol * scale)


def enumerate_elements(group: SymmetryGroup) -> list[Isometry2]:
    return group.elements()


def largest_subgroup(
    group: SymmetryGroup, accept: Callable[[Isometry2], bool]
) -> tuple[SymmetryGroup, int, list[bool]]:
    """Largest C_k / D_k inside ``group`` whose elements all pass ``accept``.

    Returns the subgroup, the number of rejected elements of ``group`` and the
    raw accept flags in ``group.elements()`` order.
    """
    if group.kind == "O2":
        raise ValueError("infinite group not enumerable")
    m = group.m
    rot_ok = [bool(accept(r)) for r in group.rotations()]
    ref_ok = [bool(accept(r)) for r in group.reflections()]
    flags = rot_ok + ref_ok

    best = SymmetryGroup.cyclic(1, group.center)
    for k in sorted(_divisors(m), reverse=True):
        step = m // k
        if not all(rot_ok[j * step] for j in range(k)):
            continue
        best = SymmetryGroup.cyclic(k, group.center)
        if group.kind == "D":
            for i in range(step):
                if all(ref_ok[i + j * step] for j in range(k)):
                    best = SymmetryGroup.dihedral(k, group.center, group.axis_angle + i * math.pi / m)
                    break
        break
    if best.kind == "C" and group.kind == "D" and any(ref_ok):
        # rotations failed but a single mirror survived: D1 beats C1
        if best.m == 1:
            i = ref_ok.index(True)
            best = SymmetryGroup.dihedral(1, group.center, group.axis_angle + i * math.pi / m)
    rejected = len(flags) - int(best.order)
    return best, rejected, flags


def group_from_elements(elements: Iterable[Isometry2], center) -> SymmetryGroup:
    """Assemble C_m / D_m from a closed list of isometries fixing ``center``."""
    elements = list(elements)
    rotations = [e for e in elements if e.is_direct]
    reflections = [e for e in elements if not e.is_direct]
    m = max(1, len(rotations))
    if reflections:
        return SymmetryGroup.dihedral(m, center, reflections[0].describe()["angle"])
    return SymmetryGroup.cyclic(m, center)
