"""Trigonometric curves p(t) = a0 + sum_k [a_k cos(kt) + b_k sin(kt)]."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .geometry import DegenerateError, Isometry2, as_point, wrap_angle

EPS_COEF = 1e-9


@dataclass(frozen=True, eq=False)
class TrigCurve:
    """Coefficients of a planar trigonometric curve.

    ``a`` and ``b`` have shape (N, 2); row ``k - 1`` holds a_k and b_k.
    Trailing harmonics below ``EPS_COEF`` times the largest harmonic norm are
    trimmed on construction, so ``degree`` is the index of the last nonzero
    harmonic.
    """

    a0: np.ndarray
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a0 = as_point(self.a0)
        a = np.array(self.a, dtype=float).reshape(-1, 2)
        b = np.array(self.b, dtype=float).reshape(-1, 2)
        if a.shape != b.shape:
            raise ValueError(f"harmonic arrays differ in shape: {a.shape} vs {b.shape}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("non-finite harmonic coefficient")
        norms = np.maximum(np.linalg.norm(a, axis=1), np.linalg.norm(b, axis=1))
        scale = norms.max() if len(norms) else 0.0
        n = len(norms)
        while n > 0 and norms[n - 1] <= EPS_COEF * scale:
            n -= 1
        a, b = a[:n].copy(), b[:n].copy()
        for arr in (a0, a, b):
            arr.setflags(write=False)
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_harmonics(cls, a0, harmonics: dict) -> "TrigCurve":
        """Build from ``{k: (a_k, b_k)}``; missing k are zero."""
        N = max(harmonics, default=0)
        a = np.zeros((N, 2))
        b = np.zeros((N, 2))
        for k, (ak, bk) in harmonics.items():
            if k < 1:
                raise ValueError(f"harmonic index must be >= 1, got {k}")
            a[k - 1] = ak
            b[k - 1] = bk
        return cls(a0, a, b)

    @classmethod
    def from_cycloid(cls, a0, terms) -> "TrigCurve":
        """Inverse of :func:`to_cycloid_form`: terms are (k, lambda, psi, sigma)."""
        harmonics = {}
        for k, lam, psi, sigma in terms:
            ak = lam * np.array([math.cos(psi), math.sin(psi)])
            harmonics[k] = (ak, sigma * np.array([-ak[1], ak[0]]))
        return cls.from_harmonics(a0, harmonics)

    @property
    def degree(self) -> int:
        return len(self.a)

    @property
    def scale(self) -> float:
        """Largest harmonic coefficient norm (the constant term is excluded)."""
        if self.degree == 0:
            return 0.0
        return float(max(np.linalg.norm(self.a, axis=1).max(), np.linalg.norm(self.b, axis=1).max()))

    def harmonic(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        if 1 <= k <= self.degree:
            return self.a[k - 1], self.b[k - 1]
        return np.zeros(2), np.zeros(2)

    def padded(self, N: int) -> tuple[np.ndarray, np.ndarray]:
        a = np.zeros((N, 2))
        b = np.zeros((N, 2))
        n = min(N, self.degree)
        a[:n] = self.a[:n]
        b[:n] = self.b[:n]
        return a, b

    def evaluate(self, t):
        return evaluate(self, t)

    def centered(self) -> "TrigCurve":
        return TrigCurve(np.zeros(2), self.a, self.b)

    def __repr__(self) -> str:
        return f"TrigCurve(a0={self.a0.tolist()}, degree={self.degree})"


def evaluate(c: TrigCurve, t):
    """Point(s) on the curve; ``t`` may be a scalar or an array."""
    t_arr = np.asarray(t, dtype=float)
    ks = np.arange(1, c.degree + 1)
    phase = np.multiply.outer(t_arr, ks)
    return c.a0 + np.cos(phase) @ c.a + np.sin(phase) @ c.b


def harmonic_points(c: TrigCurve, t: float) -> np.ndarray:
    """The (N, 2) array of p_k(t), without the constant term."""
    ks = np.arange(1, c.degree + 1)
    return np.cos(ks * t)[:, None] * c.a + np.sin(ks * t)[:, None] * c.b


@dataclass(frozen=True)
class HarmonicClass:
    kind: str  # "zero", "circle" or "ellipse"
    lam: float = 0.0
    psi: float = 0.0
    sigma: int = 0


def classify_harmonic(a_k, b_k, tol: float = EPS_COEF, scale: float | None = None) -> HarmonicClass:
    a_k = np.asarray(a_k, dtype=float)
    b_k = np.asarray(b_k, dtype=float)
    na, nb = float(np.linalg.norm(a_k)), float(np.linalg.norm(b_k))
    if scale is None:
        scale = max(na, nb)
    if max(na, nb) <= tol * scale or max(na, nb) == 0.0:
        return HarmonicClass("zero")
    if abs(na - nb) <= tol * scale and abs(float(a_k @ b_k)) <= tol * scale * scale:
        cross = a_k[0] * b_k[1] - a_k[1] * b_k[0]
        psi = wrap_angle(math.atan2(a_k[1], a_k[0]))
        return HarmonicClass("circle", na, psi, 1 if cross > 0 else -1)
    return HarmonicClass("ellipse")


def classify_all(c: TrigCurve, tol: float = EPS_COEF) -> dict[int, HarmonicClass]:
    """Classes of the nonzero harmonics, keyed by frequency."""
    scale = c.scale
    out = {}
    for k in range(1, c.degree + 1):
        h = classify_harmonic(c.a[k - 1], c.b[k - 1], tol, scale)
        if h.kind != "zero":
            out[k] = h
    return out


def to_cycloid_form(c: TrigCurve, tol: float = EPS_COEF) -> list[tuple[int, float, float, int]]:
    """(k, lambda_k, psi_k, sigma_k) per nonzero harmonic of a higher cycloid."""
    terms = []
    for k, h in classify_all(c, tol).items():
        if h.kind != "circle":
            raise ValueError(f"not a higher cycloid: harmonic {k} is an ellipse")
        terms.append((k, h.lam, h.psi, h.sigma))
    return terms


def active_frequencies(c: TrigCurve, tol: float = EPS_COEF) -> list[int]:
    return sorted(classify_all(c, tol))


def primitive_order(c: TrigCurve, tol: float = EPS_COEF) -> int:
    ks = active_frequencies(c, tol)
    return reduce(math.gcd, ks, 0) or 1


def make_primitive(c: TrigCurve, tol: float = EPS_COEF) -> TrigCurve:
    """Reindex harmonic k -> k/g where g is the gcd of the active frequencies.

    Harmonics below tolerance whose index is not a multiple of g are dropped.
    """
    g = primitive_order(c, tol)
    if g == 1:
        return c
    N = c.degree // g
    a = c.a[g - 1 :: g][:N]
    b = c.b[g - 1 :: g][:N]
    return TrigCurve(c.a0, a, b)


def apply_isometry(iso: Isometry2, c: TrigCurve) -> TrigCurve:
    A = iso.matrix
    return TrigCurve(A @ c.a0 + iso.translation, c.a @ A.T, c.b @ A.T)


def reparameterize(c: TrigCurve, alpha: int, beta: float) -> TrigCurve:
    """Coefficients of t -> c(alpha * t + beta), alpha = +-1."""
    if alpha not in (-1, 1):
        raise ValueError(f"alpha must be +1 or -1, got {alpha}")
    ks = np.arange(1, c.degree + 1)
    cb = np.cos(ks * beta)[:, None]
    sb = np.sin(ks * beta)[:, None]
    a = c.a * cb + c.b * sb
    b = alpha * (c.b * cb - c.a * sb)
    return TrigCurve(c.a0, a, b)


def curves_equal(c1: TrigCurve, c2: TrigCurve, tol: float = EPS_COEF) -> bool:
    """Coefficientwise equality relative to the largest coefficient norm.

    Two trigonometric polynomials of degree N agreeing at 2N + 1 nodes are
    identical, so this is equality of the parameterized curves.
    """
    N = max(c1.degree, c2.degree)
    a1, b1 = c1.padded(N)
    a2, b2 = c2.padded(N)
    scale = max(c1.scale, c2.scale, float(np.linalg.norm(c1.a0)), float(np.linalg.norm(c2.a0)))
    if scale == 0.0:
        return True
    diff = max(
        float(np.linalg.norm(c1.a0 - c2.a0)),
        float(np.linalg.norm(a1 - a2, axis=1).max(initial=0.0)),
        float(np.linalg.norm(b1 - b2, axis=1).max(initial=0.0)),
    )
    return diff <= tol * scale


def filter_harmonics(c: TrigCurve, ell: int) -> TrigCurve:
    """Drop the top ``ell`` harmonics (k = N - ell + 1 .. N)."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if ell >= c.degree:
        raise DegenerateError("filtering would erase curve")
    keep = c.degree - ell
    return TrigCurve(c.a0, c.a[:keep], c.b[:keep])


def to_dict(c: TrigCurve) -> dict:
    harmonics = []
    for k in range(1, c.degree + 1):
        ak, bk = c.harmonic(k)
        if not (np.any(ak) or np.any(bk)):
            continue
        harmonics.append({"k": k, "a": [float(x) for x in ak], "b": [float(x) for x in bk]})
    return {"a0": [float(x) for x in c.a0], "harmonics": harmonics}


def from_dict(data: dict) -> TrigCurve:
    try:
        a0 = data["a0"]
        harmonics = {}
        for h in data.get("harmonics", []):
            k = int(h["k"])
            if k in harmonics:
                raise ValueError(f"duplicate harmonic k={k}")
            harmonics[k] = (as_point(h.get("a", [0, 0])), as_point(h.get("b", [0, 0])))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed curve JSON: {exc}") from exc
    return TrigCurve.from_harmonics(a0, harmonics)
