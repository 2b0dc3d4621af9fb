"""symcurve command line: detect, interpolate, smooth, filter, render.

Exit codes: 0 success, 1 I/O or parse failure, 2 degenerate input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .cloud import detect_cloud
from .discrete import DiscreteCurve, detect, interpolant, laplacian_smooth, prune_collinear
from .geometry import DegenerateError
from .report import SymmetryReport
from .svg import render
from .symmetry import detect_symmetry_group
from .tolerances import Tolerances
from .trig_curve import filter_harmonics


def tolerances_from_args(args) -> Tolerances:
    tol = Tolerances.from_env()
    return tol.with_overrides(
        coef=getattr(args, "tol_coef", None),
        geom=getattr(args, "tol_geom", None),
        hausdorff=getattr(args, "tol_hausdorff", None),
    )


def trig_report(c, tol: Tolerances) -> SymmetryReport:
    res = detect_symmetry_group(c, tol)
    return SymmetryReport(
        input_kind="trig_curve",
        group=res.group,
        witnesses=res.witnesses,
        interpolant_degree=c.degree,
        interpolant_group=res.group,
        syzygy_parameters=res.syzygy_parameters,
        tolerances=tol.as_dict(),
        notes=list(res.notes),
    )


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_detect(args) -> int:
    tol = tolerances_from_args(args)
    if args.trig:
        report = trig_report(io.read_curve(args.trig), tol)
    elif args.curve:
        report = detect(prune_collinear(io.read_points(args.curve), tol.geom), tol)
    else:
        report = detect_cloud(io.read_points(args.cloud), tol)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    return 0


def cmd_interpolate(args) -> int:
    tol = tolerances_from_args(args)
    c = interpolant(prune_collinear(io.read_points(args.input), tol.geom))
    if args.out:
        io.write_curve(args.out, c)
    else:
        from .trig_curve import to_dict

        sys.stdout.write(json.dumps(to_dict(c), indent=2) + "\n")
    return 0


def cmd_smooth(args) -> int:
    if not 0.0 < args.lam < 1.0:
        raise ValueError("--lambda must lie in (0, 1)")
    if args.steps < 0:
        raise ValueError("--steps must be non-negative")
    c = laplacian_smooth(DiscreteCurve(io.read_points(args.input)), args.lam, args.steps)
    io.write_points(args.out, c.vertices)
    return 0


def cmd_filter(args) -> int:
    if args.drop < 0:
        raise ValueError("--drop must be non-negative")
    io.write_curve(args.out, filter_harmonics(io.read_curve(args.input), args.drop))
    return 0


def cmd_render(args) -> int:
    tol = tolerances_from_args(args)
    polyline = None
    if args.input.lower().endswith(".json"):
        curve = io.read_curve(args.input)
        group = detect_symmetry_group(curve, tol).group if args.axes else None
    else:
        dc = prune_collinear(io.read_points(args.input), tol.geom)
        polyline = dc.vertices
        curve = interpolant(dc)
        group = detect(dc, tol).group if args.axes else None
    svg = render(curve=curve, polyline=polyline, group=group, harmonics=args.harmonics)
    try:
        Path(args.out).write_text(svg)
    except OSError as exc:
        raise OSError(f"cannot write {args.out}: {exc}") from exc
    return 0


def _add_tol_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol-coef", type=float, default=None, help="coefficient tolerance (relative to curve scale)")
    p.add_argument("--tol-geom", type=float, default=None, help="geometric tolerance (relative to bbox diagonal)")
    p.add_argument("--tol-hausdorff", type=float, default=None, help="cloud Hausdorff threshold (relative)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symcurve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="report the symmetry group as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--curve", help="CSV closed polyline")
    src.add_argument("--cloud", help="CSV point cloud")
    src.add_argument("--trig", help="JSON trigonometric curve")
    p.add_argument("--out", help="write the report here instead of stdout")
    _add_tol_flags(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("interpolate", help="trigonometric interpolant of a CSV polyline")
    p.add_argument("input")
    p.add_argument("--out")
    _add_tol_flags(p)
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("smooth", help="Laplacian smoothing of a CSV polyline")
    p.add_argument("input")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    _add_tol_flags(p)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("filter", help="drop the top harmonics of a JSON curve")
    p.add_argument("input")
    p.add_argument("--drop", type=int, required=True)
    p.add_argument("--out", required=True)
    _add_tol_flags(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("render", help="SVG figure of a curve or polyline")
    p.add_argument("input", help="JSON curve or CSV polyline")
    p.add_argument("--out", required=True)
    p.add_argument("--axes", action="store_true", help="overlay symmetry axes and center")
    p.add_argument("--harmonics", type=int, default=0, metavar="J", help="overlay the first J component ellipses")
    _add_tol_flags(p)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateError as exc:
        print(f"symcurve: degenerate input: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"symcurve: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
