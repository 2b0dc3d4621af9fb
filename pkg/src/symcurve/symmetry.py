"""Symmetry group of a trigonometric curve, read off its coefficients.

The curve is centered at a0 (every rotation center and every mirror axis
passes through it) and reparameterized to be primitive. Then:

* if some harmonic is a proper ellipse, the rotation order is 2 when all even
  harmonics vanish and 1 otherwise, and mirror axes come from parameters that
  are ellipse vertices for every ellipse at once;
* if every harmonic is a circle (a higher cycloid), the rotation order comes
  from the signed spectrum sigma_k * k and axes from parameters where all
  circle points line up through the center.

Every candidate is confirmed by a coefficient identity before it is returned.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Mapping

import numpy as np

from .geometry import DegenerateError, Isometry2, SymmetryGroup, TWO_PI, angle_distance, wrap_angle
from .tolerances import DEFAULT, Tolerances
from .trig_curve import (
    TrigCurve,
    apply_isometry,
    classify_all,
    classify_harmonic,
    curves_equal,
    harmonic_points,
    make_primitive,
    reparameterize,
    to_cycloid_form,
)

log = logging.getLogger(__name__)

MIN_ECCENTRICITY = 1e-6


# --- (m, d)-sequences -------------------------------------------------------


def theta_value(m: int, d: int, k: int) -> frozenset:
    """Subset of {-1, +1}: +1 if m | kd - 1, -1 if m | -kd - 1."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    out = set()
    if (k * d - 1) % m == 0:
        out.add(1)
    if (-k * d - 1) % m == 0:
        out.add(-1)
    return frozenset(out)


def theta_period(m: int, d: int) -> tuple[frozenset, ...]:
    """First period (k = 1..m) of the (m, d)-sequence."""
    return tuple(theta_value(m, d, k) for k in range(1, m + 1))


@dataclass(frozen=True)
class SigmaSequence:
    """Orientation signs of the nonzero harmonics of a higher cycloid."""

    entries: Mapping[int, int]
    degree: int = 0

    def __post_init__(self):
        entries = {int(k): int(s) for k, s in dict(self.entries).items()}
        if any(k < 1 for k in entries) or any(s not in (-1, 1) for s in entries.values()):
            raise ValueError("sigma entries must map k >= 1 to +-1")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "degree", max(entries, default=0))

    @classmethod
    def from_curve(cls, c: TrigCurve, tol: float = DEFAULT.coef) -> "SigmaSequence":
        return cls({k: s for k, _, _, s in to_cycloid_form(c, tol)})

    @classmethod
    def from_listing(cls, listing) -> "SigmaSequence":
        """From a listing like ``({1}, (), (), (), {-1})`` indexed from k = 1."""
        entries = {}
        for k, item in enumerate(listing, start=1):
            item = set(item)
            if len(item) > 1:
                raise ValueError("a curve's sigma entry holds at most one sign")
            if item:
                entries[k] = item.pop()
        return cls(entries)

    def __call__(self, k: int) -> frozenset:
        s = self.entries.get(k)
        return frozenset() if s is None else frozenset({s})

    def signed_frequencies(self) -> list[int]:
        return [s * k for k, s in sorted(self.entries.items())]

    def dominated_by(self, m: int, d: int) -> bool:
        return all(self(k) <= theta_value(m, d, k) for k in self.entries)


def maximal_md(sigma: SigmaSequence | Mapping[int, int]) -> tuple[int, int] | None:
    """Largest rotation order m (and its d in [1, m]) admitted by the spectrum.

    Returns None when only one frequency is active: the curve is a circle and
    its symmetry group is O(2).

    Every signed frequency s_i must satisfy s_i * d = 1 (mod m). So all s_i are
    congruent mod m, m divides every difference s_i - s_1, and s_1 is a unit
    mod m. The largest such m is the gcd of the differences with every prime
    shared with s_1 removed; d is then the inverse of s_1 mod m.
    """
    if not isinstance(sigma, SigmaSequence):
        sigma = SigmaSequence(sigma)
    s = sigma.signed_frequencies()
    if not s:
        raise ValueError("empty sigma sequence")
    if len(s) == 1:
        return None
    g = reduce(math.gcd, (abs(si - s[0]) for si in s[1:]), 0)
    shared = math.gcd(g, s[0])
    while shared > 1:
        g //= shared
        shared = math.gcd(g, s[0])
    if g <= 1:
        return 1, 1
    return g, pow(s[0], -1, g)


# --- central symmetry, ellipse vertices, syzygies ---------------------------


def detect_central(c: TrigCurve, tol: float = DEFAULT.coef) -> bool:
    """All even-frequency harmonics vanish (curve assumed centered)."""
    return all(k % 2 == 1 for k in classify_all(c, tol))


def rytz_vertex_parameter(a_k, b_k, k: int, tol: float = DEFAULT.coef) -> float:
    """Parameter in [0, pi/2k) where p_k = a_k cos(kt) + b_k sin(kt) hits a vertex.

    |p_k|^2 = const + (aa - bb)/2 cos(2kt) + ab sin(2kt) is critical where
    tan(2kt) = 2ab / (aa - bb).
    """
    h = classify_harmonic(a_k, b_k, tol)
    if h.kind != "ellipse":
        raise ValueError(f"vertex parameter undefined for {h.kind}")
    return _vertex_parameter(np.asarray(a_k, dtype=float), np.asarray(b_k, dtype=float), k)


def ellipse_vertex_grid(t_k0: float, k: int) -> list[float]:
    """All 4k vertex parameters t_k0 + j*pi/(2k) in [0, 2pi), sorted."""
    return sorted(wrap_angle(t_k0 + j * math.pi / (2 * k)) for j in range(4 * k))


def _on_grid(t: float, origin: float, spacing: float, tol: float) -> bool:
    r = wrap_angle(t - origin, spacing)
    return min(r, spacing - r) <= tol


def _dedupe(values, period: float, tol: float) -> list[float]:
    out: list[float] = []
    for v in sorted(wrap_angle(x, period) for x in values):
        if not any(angle_distance(v, w, period) <= tol for w in out):
            out.append(v)
    return out


def _vertex_parameter(a_k: np.ndarray, b_k: np.ndarray, k: int) -> float:
    t = math.atan2(2.0 * (a_k @ b_k), a_k @ a_k - b_k @ b_k) / (2 * k)
    return wrap_angle(t, math.pi / (2 * k))


def _eccentricity(a_k: np.ndarray, b_k: np.ndarray) -> float:
    # 0 for a circle, 1 for a segment
    return float(math.hypot(a_k @ a_k - b_k @ b_k, 2.0 * (a_k @ b_k)) / (a_k @ a_k + b_k @ b_k))


def ellipse_axis_candidates(c: TrigCurve, tol: Tolerances = DEFAULT) -> list[float]:
    """Parameters in [0, pi) that are vertices of every proper ellipse harmonic.

    Circle harmonics are ignored here; they are re-checked by the final
    verification. t0 and t0 + pi always describe the same mirror, so the
    search runs modulo pi. Nearly circular ellipses have ill-conditioned
    vertices and are treated like circles unless nothing else is left.
    """
    ellipses = []
    for k, h in classify_all(c, tol.coef).items():
        if h.kind == "ellipse":
            ak, bk = c.harmonic(k)
            ellipses.append((k, _vertex_parameter(ak, bk, k), _eccentricity(ak, bk)))
    if not ellipses:
        return []
    usable = [e for e in ellipses if e[2] >= MIN_ECCENTRICITY]
    if not usable:
        usable = [max(ellipses, key=lambda e: e[2])]
    k0, t0, _ = min(usable)
    base = [t0 + j * math.pi / (2 * k0) for j in range(2 * k0)]
    keep = [
        t for t in base
        if all(_on_grid(t, tk, math.pi / (2 * k), tol.angle) for k, tk, _ in usable)
    ]
    return _dedupe(keep, math.pi, tol.angle)


def syzygy_candidates(cycloid, angle_tol: float = DEFAULT.angle) -> list[float]:
    """Parameters in [0, pi) where all circle points are collinear with the center.

    For circles i, j the arguments s_i t + psi_i and s_j t + psi_j must differ
    by a multiple of pi; the common solutions over all pairs with the first
    circle are returned.
    """
    terms = [(k, lam, psi, sigma) for k, lam, psi, sigma in cycloid if lam > 0]
    if len(terms) < 2:
        raise ValueError("syzygy needs at least two circles")
    s = [sigma * k for k, _, _, sigma in terms]
    psi = [p for _, _, p, _ in terms]
    diff = s[0] - s[1]
    base = [(psi[1] - psi[0] + j * math.pi) / diff for j in range(abs(diff))]
    keep = []
    for t in base:
        ok = True
        for i in range(2, len(terms)):
            di = s[0] - s[i]
            r = wrap_angle(di * t - (psi[i] - psi[0]), math.pi)
            if min(r, math.pi - r) > angle_tol * abs(di):
                ok = False
                break
        if ok:
            keep.append(t)
    return _dedupe(keep, math.pi, angle_tol)


# --- verification -----------------------------------------------------------


def reflection_for_parameter(c: TrigCurve, t0: float, tol: float = DEFAULT.coef) -> Isometry2 | None:
    """Mirror through a0 along the dominant harmonic point p_k(t0)."""
    pts = harmonic_points(c, t0)
    if len(pts) == 0:
        return None
    norms = np.linalg.norm(pts, axis=1)
    i = int(np.argmax(norms))
    if norms[i] <= tol * max(c.scale, 1e-300):
        log.debug("degenerate direction at t0=%r", t0)
        return None
    return Isometry2.reflection(math.atan2(pts[i, 1], pts[i, 0]), c.a0)


def verify_reflection(c: TrigCurve, t0: float, tol: float = DEFAULT.coef) -> Isometry2 | None:
    """The mirror w with w(p(t0 + t)) = p(t0 - t), if it exists."""
    omega = reflection_for_parameter(c, t0, tol)
    if omega is None:
        return None
    lhs = apply_isometry(omega, reparameterize(c, 1, t0))
    rhs = reparameterize(c, -1, t0)
    return omega if curves_equal(lhs, rhs, tol) else None


def verify_rotation(c: TrigCurve, m: int, d: int, tol: float = DEFAULT.coef) -> Isometry2 | None:
    """Rotation by 2pi/m about a0 if it equals the parameter shift 2pi d/m."""
    if m < 2:
        raise ValueError("rotation order must be at least 2")
    rho = Isometry2.rotation(TWO_PI / m, c.a0)
    lhs = apply_isometry(rho, c)
    rhs = reparameterize(c, 1, TWO_PI * d / m)
    return rho if curves_equal(lhs, rhs, tol) else None


def satisfies_identity(c: TrigCurve, iso: Isometry2, alpha: int, beta: float, tol: float = DEFAULT.coef) -> bool:
    """iso(p(t)) == p(alpha * t + beta) coefficientwise."""
    return curves_equal(apply_isometry(iso, c), reparameterize(c, alpha, beta), tol)


# --- decision tree -----------------------------------------------------------


@dataclass
class CurveSymmetry:
    group: SymmetryGroup
    witnesses: list[Isometry2]
    branch: str  # "circle", "ellipse" or "cycloid"
    syzygy_parameters: list[float] = field(default_factory=list)
    md: tuple[int, int] | None = None
    primitive_order: int = 1
    notes: list[str] = field(default_factory=list)


def detect_symmetry_group(c: TrigCurve, tol: Tolerances = DEFAULT) -> CurveSymmetry:
    """Full symmetry group of the curve with verified witnesses.

    Syzygy parameters are reported in the primitive parameterization, reduced
    to [0, pi).
    """
    if c.degree == 0 or not classify_all(c, tol.coef):
        raise DegenerateError("point, symmetry group is O(2) about a0 - not a curve")
    g = reduce(math.gcd, classify_all(c, tol.coef), 0)
    p = make_primitive(c, tol.coef)
    classes = classify_all(p, tol.coef)
    center = p.a0
    notes = [f"curve reparameterized t -> {g}t to be primitive"] if g > 1 else []

    if len(classes) == 1 and next(iter(classes.values())).kind == "circle":
        return CurveSymmetry(SymmetryGroup.full_circle(center), [], "circle", primitive_order=g, notes=notes)

    if any(h.kind == "ellipse" for h in classes.values()):
        branch = "ellipse"
        md = None
        rotation = None
        m = 1
        if detect_central(p, tol.coef):
            rotation = verify_rotation(p, 2, 1, tol.coef)
            if rotation is not None:
                m = 2
            else:
                notes.append("even harmonics vanish but central symmetry failed verification")
        candidates = ellipse_axis_candidates(p, tol)
    else:
        branch = "cycloid"
        terms = to_cycloid_form(p, tol.coef)
        md = maximal_md(SigmaSequence({k: s for k, _, _, s in terms}))
        m, rotation = 1, None
        if md is not None and md[0] > 1:
            # the maximal order should verify; fall back through divisors if round-off bites
            for mm in sorted((x for x in range(2, md[0] + 1) if md[0] % x == 0), reverse=True):
                rotation = verify_rotation(p, mm, md[1] % mm or mm, tol.coef)
                if rotation is not None:
                    m = mm
                    break
            if m != md[0]:
                notes.append(f"maximal (m,d)={md} but only order {m} verified")
        candidates = syzygy_candidates(terms, tol.angle)

    syzygies: list[float] = []
    reflections: list[Isometry2] = []
    axis_angles: list[float] = []
    for t0 in candidates:
        omega = verify_reflection(p, t0, tol.coef)
        if omega is None:
            continue
        angle = omega.describe()["angle"]
        if any(angle_distance(angle, a, math.pi) <= tol.angle for a in axis_angles):
            continue
        syzygies.append(t0)
        reflections.append(omega)
        axis_angles.append(angle)

    witnesses = [rotation] if rotation is not None else []
    if reflections:
        group = SymmetryGroup.dihedral(m, center, axis_angles[0])
        if len(reflections) != m:
            notes.append(f"expected {m} mirror axes, verified {len(reflections)}")
        witnesses += reflections
    else:
        group = SymmetryGroup.cyclic(m, center)
    return CurveSymmetry(group, witnesses, branch, syzygies, md, g, notes)
