"""Exact symmetry groups of trigonometric curves, closed polylines and point clouds."""
from .cloud import PointCloud, convex_hull, detect_cloud, hausdorff
from .discrete import (
    DiscreteCurve,
    brute_force_group,
    detect,
    filtered_interpolants,
    interpolant,
    laplacian_smooth,
    prune_collinear,
    verify_on_vertices,
)
from .geometry import DegenerateError, Isometry2, SymmetryGroup, apply, compose, enumerate_elements, invert
from .interpolate import trig_interpolate
from .report import SymmetryReport
from .symmetry import detect_symmetry_group, maximal_md, theta_value
from .tolerances import Tolerances
from .trig_curve import TrigCurve, evaluate

__all__ = [
    "DegenerateError",
    "DiscreteCurve",
    "Isometry2",
    "PointCloud",
    "SymmetryGroup",
    "SymmetryReport",
    "Tolerances",
    "TrigCurve",
    "apply",
    "brute_force_group",
    "compose",
    "convex_hull",
    "detect",
    "detect_cloud",
    "detect_symmetry_group",
    "enumerate_elements",
    "evaluate",
    "filtered_interpolants",
    "hausdorff",
    "interpolant",
    "invert",
    "laplacian_smooth",
    "maximal_md",
    "prune_collinear",
    "theta_value",
    "trig_interpolate",
    "verify_on_vertices",
]
