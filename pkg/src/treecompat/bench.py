"""Doubling-ladder benchmark: near-linear scaling and degree independence.

Generates compatible profiles whose total size (nodes + edges) hits a
requested target, times the full compatibility run, and reports wall
time together with time normalized by M log2^2 M.  Star-heavy profiles
probe the claim that the running time does not depend on node degrees.
"""

from __future__ import annotations

import csv
import gc
import math
import time
from dataclasses import dataclass

from .buildg import run_buildg
from .gen import GenConfig, gen_compatible
from .phylo import Profile

DEFAULT_SIZES = [1 << e for e in range(15, 22)]
DEFAULT_SHAPES = ["binary", "star"]
BENCH_K_TREES = 4
BENCH_COVERAGE = 0.75


@dataclass
class BenchRow:
    shape: str
    target: int
    m_p: int
    seconds: float
    normalized: float       # seconds / (m_p * log2(m_p)^2)
    scans: int
    compatible: bool


def profile_with_size(target: int, shape: str, seed: int) -> Profile:
    """Compatible profile whose m_p lands within a few percent of target."""
    resolution = "star" if shape == "star" else shape
    # nodes+edges per species scales linearly; calibrate in two passes
    n = max(4, target // (4 * BENCH_K_TREES))
    for _ in range(4):
        cfg = GenConfig(seed=seed, n_species=n, k_trees=BENCH_K_TREES,
                        coverage=BENCH_COVERAGE, resolution=resolution)
        p = gen_compatible(cfg)
        m = p.m_p
        if abs(m - target) <= target * 0.03:
            return p
        n = max(4, int(n * target / m))
    return p


def run_ladder(sizes=None, shapes=None, seed: int = 0,
               progress=None) -> list[BenchRow]:
    sizes = sizes or DEFAULT_SIZES
    shapes = shapes or DEFAULT_SHAPES
    rows: list[BenchRow] = []
    for shape in shapes:
        for target in sizes:
            p = profile_with_size(target, shape, seed)
            gc.disable()
            t0 = time.perf_counter()
            tree, stats = run_buildg(p)
            dt = time.perf_counter() - t0
            gc.enable()
            gc.collect()
            log2m = math.log2(stats.m_p)
            rows.append(BenchRow(
                shape=shape, target=target, m_p=stats.m_p, seconds=dt,
                normalized=dt / (stats.m_p * log2m * log2m),
                scans=stats.scans, compatible=tree is not None))
            if progress is not None:
                progress(rows[-1])
    return rows


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"{'shape':8} {'target':>9} {'m_p':>9} {'seconds':>9} "
             f"{'t/(M lg^2 M)':>13} {'scans':>10}"]
    for r in rows:
        lines.append(f"{r.shape:8} {r.target:>9} {r.m_p:>9} "
                     f"{r.seconds:>9.3f} {r.normalized:>13.3e} {r.scans:>10}")
    return "\n".join(lines)


def write_csv(rows: list[BenchRow], path: str):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["shape", "target", "m_p", "seconds", "normalized",
                    "scans", "compatible"])
        for r in rows:
            w.writerow([r.shape, r.target, r.m_p, f"{r.seconds:.6f}",
                        f"{r.normalized:.6e}", r.scans, r.compatible])
