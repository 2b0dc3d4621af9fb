"""Compare detect() against the brute-force oracle on random and planted polylines."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

import numpy as np

from symcurve import apply, brute_force_group, detect, prune_collinear
from symcurve.shapes import planted_polyline, random_isometry


@dataclass
class SweepConfig:
    count: int = 1000
    seed: int = 0
    max_m: int = 12
    max_arc: int = 8
    max_random_n: int = 30
    planted_fraction: float = 0.5


def run(cfg: SweepConfig) -> dict:
    seeds = np.random.SeedSequence(cfg.seed).generate_state(cfg.count)
    mismatches = []
    groups: dict[str, int] = {}
    t0 = time.perf_counter()
    for i, s in enumerate(seeds):
        rng = np.random.default_rng(int(s))
        if rng.random() < cfg.planted_fraction:
            pts = planted_polyline(rng, int(rng.integers(1, cfg.max_m + 1)), bool(rng.integers(0, 2)), int(rng.integers(3, cfg.max_arc + 1)))
            pts = apply(random_isometry(rng), pts)
        else:
            pts = rng.uniform(-1, 1, (int(rng.integers(3, cfg.max_random_n + 1)), 2))
        c = prune_collinear(pts)
        got, want = detect(c).group, brute_force_group(c)
        groups[want.name] = groups.get(want.name, 0) + 1
        if not got.isclose(want, 1e-8, 1e-7):
            mismatches.append((i, int(s), got.name, want.name))
    return {"cases": cfg.count, "mismatches": mismatches, "seconds": time.perf_counter() - t0, "groups": groups}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(SweepConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = SweepConfig(**vars(p.parse_args(argv)))
    out = run(cfg)
    print(f"{out['cases']} cases, {len(out['mismatches'])} mismatches, {out['seconds']:.2f} s")
    print("oracle groups:", dict(sorted(out["groups"].items(), key=lambda kv: (kv[0][0], int(kv[0][1:])))))
    for row in out["mismatches"]:
        print("mismatch", row)
    return 1 if out["mismatches"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
