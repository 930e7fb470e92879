"""Wall-clock scaling of the edge-colouring driver on the benchmark family."""

from __future__ import annotations

import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .driver import edge_colour_optimal_local
from .generators import bench_instance


@dataclass
class BenchRow:
    m: int
    n: int
    median: float
    times: list[float]
    ratio: float | None = None

    def csv(self) -> str:
        ratio = "" if self.ratio is None else f"{self.ratio:.3f}"
        return f"{self.m},{self.n},{self.median:.6f},{ratio}"


def _time_one(args: tuple[int, int]) -> float:
    m, seed = args
    g = bench_instance(m, seed)
    start = time.perf_counter()
    c, _ = edge_colour_optimal_local(g)
    elapsed = time.perf_counter() - start
    if not c.is_complete() or c.validate() is not None:
        raise RuntimeError(f"benchmark colouring failed for m={m} seed={seed}")
    return elapsed


def run_bench(sizes=(1000, 2000, 4000), runs: int = 5, seed: int = 0, jobs: int = 1) -> list[BenchRow]:
    """Median time per size over ``runs`` instances seeded ``seed, seed+1, ...``.

    ``ratio`` compares each median with the previous size's; for a ladder of
    doublings it is the growth factor per doubling.
    """
    if runs < 1:
        raise ValueError("need at least one run per size")
    tasks = [(m, seed + r) for m in sizes for r in range(runs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            times = list(pool.map(_time_one, tasks))
    else:
        times = [_time_one(t) for t in tasks]
    rows = []
    for i, m in enumerate(sizes):
        chunk = times[i * runs:(i + 1) * runs]
        rows.append(BenchRow(m, max(2, m // 2), statistics.median(chunk), chunk))
    for prev, row in zip(rows, rows[1:]):
        row.ratio = row.median / prev.median if prev.median > 0 else None
    return rows


def format_bench(rows: list[BenchRow]) -> str:
    return "m,n,median_seconds,ratio\n" + "".join(r.csv() + "\n" for r in rows)
