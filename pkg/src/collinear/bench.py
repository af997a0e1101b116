"""Wall-time comparison of the strategies on one point set."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .enumeration import enumerate_baseline, enumerate_layered, enumerate_parallel
from .geometry import PointSet, SigmaOrder
from .layers import peel


@dataclass
class Timing:
    label: str
    seconds: float
    sets: int


def run_bench(ps: PointSet, workers=(1, 2, 4), min_size: int = 3,
              sigma: SigmaOrder | None = None, repeat: int = 1) -> list[Timing]:
    """Time baseline, layered and parallel (per worker count); best of ``repeat``.

    Raises AssertionError if the strategies disagree.
    """
    decomposition = peel(ps)
    runs = [("baseline", lambda: enumerate_baseline(ps, sigma, min_size)),
            ("layered", lambda: enumerate_layered(ps, sigma, min_size, decomposition))]
    for w in workers:
        runs.append((f"parallel[{w}]",
                     lambda w=w: enumerate_parallel(ps, sigma, min_size, w, decomposition)))
    timings = []
    reference = None
    for label, fn in runs:
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            result = fn()
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = result.sets
        elif result.sets != reference:
            raise AssertionError(f"{label} disagrees with baseline")
        timings.append(Timing(label, best, len(result)))
    return timings


def format_table(ps: PointSet, timings: list[Timing]) -> str:
    m = peel(ps).depth
    lines = [f"n={len(ps)} m={m}", f"{'strategy':<14}{'ms':>12}{'sets':>8}"]
    for t in timings:
        lines.append(f"{t.label:<14}{t.seconds * 1000:>12.1f}{t.sets:>8}")
    return "\n".join(lines)
