"""End-to-end enumeration of maximal collinear subsets.

Three strategies produce identical canonical output:

``baseline``
    sort every other point around each pivot by folded angle.
``layered``
    peel convex layers once, then build each pivot's order by heap-merging
    the angularly sorted pieces of the layers.
``parallel``
    the layered strategy with pivots spread over worker processes; each
    worker detects runs straight off the heap and never materialises the
    merged order.
"""
from __future__ import annotations

import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cyclic import (
    MergedSequence,
    build_merged,
    detect_runs,
    filter_first_in_sigma,
    iter_accepted_sets,
)
from .geometry import PointSet, SigmaOrder
from .layers import LayerDecomposition, heap_merge, peel, split_all

STRATEGIES = ("baseline", "layered", "parallel")


class ConsistencyError(RuntimeError):
    """A set was reported twice; the exactly-once guarantee is broken."""


@dataclass(frozen=True)
class EnumerationResult:
    sets: tuple[tuple[int, ...], ...]
    stats: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def canonicalize(raw_sets: Iterable[Iterable[int]], stats: dict | None = None) -> EnumerationResult:
    sets = sorted(tuple(sorted(s)) for s in raw_sets)
    for a, b in zip(sets, sets[1:]):
        if a == b:
            raise ConsistencyError(f"set {list(a)} reported more than once")
    return EnumerationResult(tuple(sets), dict(stats or {}))


def _check_args(ps: PointSet, sigma: SigmaOrder | None, min_size: int) -> SigmaOrder:
    if min_size < 2:
        raise ValueError("min_size must be at least 2")
    if sigma is None:
        return SigmaOrder.identity(len(ps))
    if len(sigma) != len(ps):
        raise ValueError(f"sigma covers {len(sigma)} points, point set has {len(ps)}")
    return sigma


def enumerate_baseline(ps: PointSet, sigma: SigmaOrder | None = None,
                       min_size: int = 3) -> EnumerationResult:
    sigma = _check_args(ps, sigma, min_size)
    t0 = time.perf_counter()
    found = []
    if len(ps) >= min_size:
        for p in sigma.order:
            for run in detect_runs(build_merged(p, ps), min_size):
                if filter_first_in_sigma(run, sigma):
                    found.append(run.as_set())
    return canonicalize(found, {
        "n": len(ps), "m": None, "strategy": "baseline",
        "seconds": time.perf_counter() - t0,
    })


def layered_merged(p: int, decomposition: LayerDecomposition, ps: PointSet) -> MergedSequence:
    """The folded order around ``p``, assembled by the heap merge."""
    keys, order = [], []
    for key, q in heap_merge(p, split_all(p, decomposition, ps), decomposition, ps):
        keys.append(key)
        order.append(q)
    return MergedSequence(p, tuple(order), tuple(keys))


def enumerate_layered(ps: PointSet, sigma: SigmaOrder | None = None,
                      min_size: int = 3,
                      decomposition: LayerDecomposition | None = None) -> EnumerationResult:
    """Layered strategy. Any decomposition into convex layers may be supplied;
    by default the points are peeled."""
    sigma = _check_args(ps, sigma, min_size)
    t0 = time.perf_counter()
    if decomposition is None:
        decomposition = peel(ps)
    else:
        decomposition.check_partition(len(ps))
    found = []
    if len(ps) >= min_size:
        for p in sigma.order:
            for run in detect_runs(layered_merged(p, decomposition, ps), min_size):
                if filter_first_in_sigma(run, sigma):
                    found.append(run.as_set())
    return canonicalize(found, {
        "n": len(ps), "m": decomposition.depth, "strategy": "layered",
        "seconds": time.perf_counter() - t0,
    })


# Worker state, installed once per process; read-only after that.
_shared: tuple | None = None


def _install(ps, decomposition, rank, min_size):
    global _shared
    _shared = (ps, decomposition, rank, min_size)


def _stream_pivots(pivots: Sequence[int]) -> tuple[list[tuple[int, ...]], int]:
    ps, decomposition, rank, min_size = _shared
    found = []
    peak_pieces = 0
    for p in pivots:
        pieces = split_all(p, decomposition, ps)
        peak_pieces = max(peak_pieces, len(pieces))
        found.extend(iter_accepted_sets(
            p, heap_merge(p, pieces, decomposition, ps), rank, min_size))
    return found, peak_pieces


def _chunks(seq: Sequence[int], size: int):
    for i in range(0, len(seq), size):
        yield seq[i:i + size]


def _mp_context():
    methods = multiprocessing.get_all_start_methods()
    return multiprocessing.get_context("fork" if "fork" in methods else "spawn")


def enumerate_parallel(ps: PointSet, sigma: SigmaOrder | None = None,
                       min_size: int = 3, workers: int = 2,
                       decomposition: LayerDecomposition | None = None,
                       chunk_size: int | None = None) -> EnumerationResult:
    """Spread pivots over ``workers`` processes.

    The point set and layer decomposition are installed once per worker and
    only read afterwards. Pivots are handed out in chunks as workers free
    up, so the order of partial results varies between runs; the canonical
    output does not.
    """
    global _shared
    if workers < 1:
        raise ValueError("workers must be at least 1")
    sigma = _check_args(ps, sigma, min_size)
    t0 = time.perf_counter()
    if decomposition is None:
        decomposition = peel(ps)
    else:
        decomposition.check_partition(len(ps))
    args = (ps, decomposition, sigma.rank, min_size)
    pivots = list(sigma.order) if len(ps) >= min_size else []
    found: list[tuple[int, ...]] = []
    peak_pieces = 0
    if workers == 1 or len(pivots) < 2:
        saved = _shared
        _install(*args)
        try:
            found, peak_pieces = _stream_pivots(pivots)
        finally:
            _shared = saved
    else:
        size = chunk_size or max(1, len(pivots) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers, mp_context=_mp_context(),
                                 initializer=_install, initargs=args) as pool:
            for part, peak in pool.map(_stream_pivots, _chunks(pivots, size)):
                found.extend(part)
                peak_pieces = max(peak_pieces, peak)
    m = decomposition.depth
    return canonicalize(found, {
        "n": len(ps), "m": m, "strategy": "parallel", "workers": workers,
        "seconds": time.perf_counter() - t0,
        "peak_pieces": peak_pieces,
        # PRAM accounting with one processor per pivot, and what this run used
        "space_bound_pram": len(ps) * m,
        "space_bound_realized": len(ps) + workers * 4 * m,
    })


def enumerate_sets(ps: PointSet, strategy: str = "layered",
                   sigma: SigmaOrder | None = None, min_size: int = 3,
                   workers: int | None = None) -> EnumerationResult:
    if strategy == "baseline":
        return enumerate_baseline(ps, sigma, min_size)
    if strategy == "layered":
        return enumerate_layered(ps, sigma, min_size)
    if strategy == "parallel":
        return enumerate_parallel(ps, sigma, min_size, workers or os.cpu_count() or 1)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
