from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Isometry2, SymmetryGroup


def _num(x: float) -> float:
    # 12 decimals hides round-off noise such as -0.0 or 1e-17 in JSON output
    return round(float(x), 12) + 0.0


def group_to_dict(g: SymmetryGroup) -> dict:
    return {
        "group": g.name,
        "m": g.m,
        "center": [_num(x) for x in g.center],
        "axes": [_num(a) for a in g.axes],
    }


def isometry_to_dict(iso: Isometry2) -> dict:
    d = iso.describe(atol=1e-9)
    out = {"kind": d["kind"]}
    if d.get("center") is not None:
        out["center"] = [_num(x) for x in d["center"]]
    if "angle" in d:
        out["angle"] = _num(d["angle"])
    if "vector" in d:
        out["vector"] = [_num(x) for x in d["vector"]]
    return out


@dataclass
class SymmetryReport:
    input_kind: str  # "trig_curve", "discrete_curve" or "point_cloud"
    group: SymmetryGroup
    witnesses: list[Isometry2]
    interpolant_degree: int | None = None
    interpolant_group: SymmetryGroup | None = None
    rejected_candidates: int = 0
    syzygy_parameters: list[float] = field(default_factory=list)
    tolerances: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"input_kind": self.input_kind}
        out.update(group_to_dict(self.group))
        out["witnesses"] = [isometry_to_dict(w) for w in self.witnesses]
        out["interpolant_degree"] = self.interpolant_degree
        out["interpolant_group"] = self.interpolant_group.name if self.interpolant_group else None
        out["rejected_candidates"] = self.rejected_candidates
        out["syzygy_parameters"] = [_num(t) for t in self.syzygy_parameters]
        out["tolerances"] = dict(self.tolerances)
        out["notes"] = list(self.notes)
        return out
