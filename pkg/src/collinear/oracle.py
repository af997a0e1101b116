"""Brute-force ground truth, independent of the cyclic-order machinery."""
from __future__ import annotations

from collections import defaultdict
from math import gcd

from .enumeration import EnumerationResult, canonicalize
from .geometry import PointSet, orient

ORACLE_CAP = 500


class OracleLimitError(ValueError):
    pass


def _guard(ps: PointSet, cap: int) -> None:
    if len(ps) > cap:
        raise OracleLimitError(f"oracle refuses n={len(ps)} > cap={cap}")


def pair_expansion(ps: PointSet, min_size: int = 3) -> list[tuple[int, ...]]:
    """For each pair not yet covered, collect every point on its line."""
    n = len(ps)
    covered = set()
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in covered:
                continue
            line = [k for k in range(n) if orient(ps[i], ps[j], ps[k]) == 0]
            for a in range(len(line)):
                for b in range(a + 1, len(line)):
                    covered.add((line[a], line[b]))
            if len(line) >= min_size:
                out.append(tuple(line))
    return out


def line_key(a, b) -> tuple[int, int, int]:
    """Reduced, sign-normalised (A, B, C) with A*x + B*y + C = 0 through a and b."""
    A = b[1] - a[1]
    B = a[0] - b[0]
    C = -(A * a[0] + B * a[1])
    g = gcd(gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    if A < 0 or (A == 0 and B < 0):
        A, B, C = -A, -B, -C
    return A, B, C


def line_grouping(ps: PointSet, min_size: int = 3) -> list[tuple[int, ...]]:
    """Bucket every pair by its exact line key."""
    n = len(ps)
    lines: dict[tuple[int, int, int], set[int]] = defaultdict(set)
    for i in range(n):
        for j in range(i + 1, n):
            members = lines[line_key(ps[i], ps[j])]
            members.add(i)
            members.add(j)
    return [tuple(sorted(s)) for s in lines.values() if len(s) >= min_size]


def brute_force(ps: PointSet, min_size: int = 3, cap: int = ORACLE_CAP,
                method: str = "pairs") -> EnumerationResult:
    _guard(ps, cap)
    if method == "pairs":
        raw = pair_expansion(ps, min_size)
    elif method == "lines":
        raw = line_grouping(ps, min_size)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    return canonicalize(raw, {"n": len(ps), "m": None, "strategy": f"oracle-{method}"})
