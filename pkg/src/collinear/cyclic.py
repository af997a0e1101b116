"""Per-pivot work: the folded cyclic order around a point and its collinear runs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .geometry import (
    ANGLE_SHIFT,
    FoldedDirection,
    PointSet,
    SigmaOrder,
    fold_direction,
    folded_key,
    key_direction,
    squared_distance,
)


@dataclass(frozen=True)
class MergedSequence:
    """Every point other than ``pivot``, ordered by folded angle around it.

    ``keys[i]`` is the folded sort key of ``order[i]`` (see
    :func:`collinear.geometry.folded_key`); keys are strictly increasing.
    """
    pivot: int
    order: tuple[int, ...]
    keys: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def entries(self, ps: PointSet) -> list[tuple[int, FoldedDirection, int]]:
        p = ps[self.pivot]
        return [(q, fold_direction(p, ps[q]), squared_distance(p, ps[q]))
                for q in self.order]


@dataclass(frozen=True)
class CollinearRun:
    pivot: int
    members: tuple[int, ...]

    def as_set(self) -> tuple[int, ...]:
        return tuple(sorted((self.pivot,) + self.members))


def build_merged(p: int, ps: PointSet) -> MergedSequence:
    """Sort all other points around ``p`` directly by the folded order.

    Sorting by the folded key gives the same sequence as sorting by full
    angle, splitting at the horizontal and merging the two halves, because
    each half is already sorted under both orders.
    """
    xs, ys = ps.xs, ps.ys
    px, py = xs[p], ys[p]
    keyed = sorted((folded_key(px, py, xs[q], ys[q]), q)
                   for q in range(len(xs)) if q != p)
    return MergedSequence(p, tuple(q for _, q in keyed), tuple(k for k, _ in keyed))


def iter_runs(pivot: int, stream: Iterable[tuple[int, int]],
              min_members: int = 2) -> Iterator[CollinearRun]:
    """Group a stream of (key, index) pairs into maximal equal-direction blocks.

    Consumes the stream once and holds only the block being scanned.
    """
    block: list[int] = []
    current = None
    for key, q in stream:
        d = key_direction(key)
        if d != current:
            if len(block) >= min_members:
                yield CollinearRun(pivot, tuple(block))
            block = [q]
            current = d
        else:
            block.append(q)
    if len(block) >= min_members:
        yield CollinearRun(pivot, tuple(block))


def detect_runs(m: MergedSequence, min_size: int = 3) -> list[CollinearRun]:
    """Maximal blocks of consecutive entries sharing a folded direction.

    Only blocks that form a set of at least ``min_size`` points together
    with the pivot are returned.
    """
    return list(iter_runs(m.pivot, zip(m.keys, m.order), max(min_size - 1, 1)))


def filter_first_in_sigma(run: CollinearRun, sigma: SigmaOrder) -> bool:
    rank = sigma.rank
    r = rank[run.pivot]
    return all(r < rank[q] for q in run.members)


def iter_accepted_sets(pivot: int, stream: Iterable[tuple[int, int]],
                       rank, min_size: int = 3) -> Iterator[tuple[int, ...]]:
    """Run detection fused with the first-in-sigma filter.

    A block is dropped as soon as one of its members precedes the pivot, so
    rejected blocks are never buffered.
    """
    need = max(min_size - 1, 1)
    r = rank[pivot]
    block: list[int] = []
    alive = False
    current = None
    for key, q in stream:
        d = key >> ANGLE_SHIFT
        if d != current:
            if alive and len(block) >= need:
                block.append(pivot)
                yield tuple(sorted(block))
            current = d
            alive = rank[q] > r
            block = [q] if alive else []
        elif alive:
            if rank[q] > r:
                block.append(q)
            else:
                alive = False
                block = []
    if alive and len(block) >= need:
        block.append(pivot)
        yield tuple(sorted(block))
