"""Scaling benchmark: structural pipeline versus the dense oracle."""
from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .chordal import decompose
from .generators import random_quasi_threshold
from .graph import Graph, laplacian
from .oracle import eigenvalues
from .structural import qt_spectrum_structural


def structural_pipeline(g: Graph):
    """Chordal decomposition followed by the clique/separator spectrum formula."""
    return qt_spectrum_structural(g, decompose(g))


def best_time_ms(fn: Callable[[], object], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


@dataclass
class BenchRow:
    n: int
    m: int
    t_structural_ms: float
    t_oracle_ms: float | None


def bench_sizes(max_n: int, points: int, oracle_max_n: int = 0) -> list[int]:
    """10-vertex smoke size, ``points`` halvings of ``max_n``, and powers of two up to ``oracle_max_n``."""
    sizes = {10}
    sizes.update(max(1, max_n >> j) for j in range(points))
    p = 32
    while p <= oracle_max_n:
        sizes.add(p)
        p *= 2
    return sorted(sizes)


def run_bench(
    sizes: list[int],
    *,
    oracle_max_n: int = 512,
    seed: int = 1,
    repeats: int = 3,
    oracle_repeats: int = 1,
) -> list[BenchRow]:
    eigenvalues(np.array([[1.0, -1.0], [-1.0, 1.0]]))  # load the compiled kernels before timing
    rows = []
    for n in sizes:
        g = random_quasi_threshold(n, seed)
        ts = best_time_ms(lambda: structural_pipeline(g), repeats)
        to = None
        if n <= oracle_max_n:
            L = laplacian(g)
            to = best_time_ms(lambda: eigenvalues(L), oracle_repeats)
        rows.append(BenchRow(n, g.m, ts, to))
    return rows


def write_csv(rows: list[BenchRow], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "m", "t_structural_ms", "t_oracle_ms"])
        for r in rows:
            w.writerow([r.n, r.m, f"{r.t_structural_ms:.3f}", "" if r.t_oracle_ms is None else f"{r.t_oracle_ms:.3f}"])
