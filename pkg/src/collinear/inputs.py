"""Reading point files and generating point sets."""
from __future__ import annotations

import random
import re
from math import gcd

from .geometry import (
    COORD_BOUND,
    CoordinateRangeError,
    DuplicatePointError,
    GeometryError,
    PointSet,
)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateLineError(ParseError):
    def __init__(self, first_line: int, second_line: int, point):
        self.first_line = first_line
        self.second_line = second_line
        ValueError.__init__(
            self, f"duplicate point {point} on lines {first_line} and {second_line}")
        self.line = second_line


class GeneratorSpecError(ValueError):
    pass


def parse_points(text: str) -> PointSet:
    """Parse lines of ``x y``; ``#`` starts a comment line, blank lines are skipped.

    Indices follow file order.
    """
    coords = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected two integers, got {raw!r}")
        try:
            x, y = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"not an integer pair: {raw!r}") from None
        for v in (x, y):
            if abs(v) > COORD_BOUND:
                raise CoordinateRangeError(
                    f"line {lineno}: coordinate {v} outside [-2**30, 2**30]")
        if (x, y) in seen:
            raise DuplicateLineError(seen[(x, y)], lineno, (x, y))
        seen[(x, y)] = lineno
        coords.append((x, y))
    if not coords:
        raise ParseError(0, "no points in input")
    return PointSet(coords)


def format_points(ps: PointSet) -> str:
    return "".join(f"{x} {y}\n" for x, y in ps.as_tuples())


# -- generators --------------------------------------------------------------

def grid(width: int, height: int) -> PointSet:
    if width < 1 or height < 1:
        raise GeneratorSpecError("grid dimensions must be positive")
    return PointSet((x, y) for y in range(height) for x in range(width))


def uniform(n: int, box: int, seed: int) -> PointSet:
    if n < 1:
        raise GeneratorSpecError("need at least one point")
    if box < 0 or box > COORD_BOUND:
        raise GeneratorSpecError("box must lie in [0, 2**30]")
    if n > (2 * box + 1) ** 2:
        raise GeneratorSpecError(f"{n} distinct points do not fit in [-{box}, {box}]^2")
    rng = random.Random(seed)
    seen = set()
    pts = []
    while len(pts) < n:
        q = (rng.randint(-box, box), rng.randint(-box, box))
        if q not in seen:
            seen.add(q)
            pts.append(q)
    return PointSet(pts)


MAX_STEP = 3


def _line_points(rng: random.Random, k: int, box: int, taken: set):
    """k distinct lattice points on a random line inside the box, avoiding ``taken``."""
    for _ in range(200):
        while True:
            dx, dy = rng.randint(-MAX_STEP, MAX_STEP), rng.randint(0, MAX_STEP)
            if (dx, dy) != (0, 0) and gcd(dx, dy) == 1 and (dy > 0 or dx > 0):
                break
        # largest parameter span that still fits the box
        span = min(2 * box // abs(d) for d in (dx, dy) if d) if box else 0
        if span + 1 < k:
            continue
        ts = sorted(rng.sample(range(span + 1), k))
        lo_x = -box - min(0, dx * span)
        hi_x = box - max(0, dx * span)
        lo_y = -box - min(0, dy * span)
        hi_y = box - max(0, dy * span)
        bx = rng.randint(lo_x, hi_x)
        by = rng.randint(lo_y, hi_y)
        pts = [(bx + t * dx, by + t * dy) for t in ts]
        if not taken.intersection(pts):
            return pts
    raise GeneratorSpecError(f"could not place a line of {k} points in box {box}")


def planted(lines: int, per_line: int, noise: int, box: int | None, seed: int) -> PointSet:
    """``lines`` random lines carrying ``per_line`` points each, plus ``noise`` free points."""
    if lines < 0 or per_line < 1 or noise < 0 or lines * per_line + noise < 1:
        raise GeneratorSpecError("planted needs lines, per_line >= 1 and noise >= 0")
    if box is None:
        box = max(20, MAX_STEP * per_line)
    if box > COORD_BOUND:
        raise GeneratorSpecError("box must lie in [0, 2**30]")
    total = lines * per_line + noise
    if total > (2 * box + 1) ** 2:
        raise GeneratorSpecError(f"{total} distinct points do not fit in [-{box}, {box}]^2")
    rng = random.Random(seed)
    taken: set = set()
    pts = []
    for _ in range(lines):
        line = _line_points(rng, per_line, box, taken)
        taken.update(line)
        pts.extend(line)
    while len(pts) < total:
        q = (rng.randint(-box, box), rng.randint(-box, box))
        if q not in taken:
            taken.add(q)
            pts.append(q)
    return PointSet(pts)


_GRID = re.compile(r"grid:(\d+)\s*[x×X\*]\s*(\d+)$")


def _kv(body: str) -> tuple[list[str], dict[str, str]]:
    positional, named = [], {}
    for part in filter(None, (s.strip() for s in body.split(","))):
        if "=" in part:
            k, v = part.split("=", 1)
            named[k.strip()] = v.strip()
        else:
            positional.append(part)
    return positional, named


def generate(spec: str, seed: int = 0) -> PointSet:
    """Build a point set from a generator spec.

    ``grid:WxH``, ``random:N,box=B`` (or ``random:N,B``), and
    ``planted:lines=L,per_line=K,noise=R[,box=B]``.
    """
    spec = spec.strip()
    try:
        m = _GRID.match(spec)
        if m:
            return grid(int(m.group(1)), int(m.group(2)))
        kind, _, body = spec.partition(":")
        positional, named = _kv(body)
        if kind == "random":
            n = int(named.pop("n", positional.pop(0) if positional else 0))
            box = int(named.pop("box", positional.pop(0) if positional else 20))
            if positional or named:
                raise GeneratorSpecError(f"unexpected fields in {spec!r}")
            return uniform(n, box, seed)
        if kind == "planted":
            L = int(named.pop("lines"))
            k = int(named.pop("per_line"))
            r = int(named.pop("noise", 0))
            box = named.pop("box", None)
            if positional or named:
                raise GeneratorSpecError(f"unexpected fields in {spec!r}")
            return planted(L, k, r, None if box is None else int(box), seed)
    except (KeyError, ValueError, IndexError) as exc:
        if isinstance(exc, (GeneratorSpecError, GeometryError)):
            raise
        raise GeneratorSpecError(f"bad generator spec {spec!r}: {exc}") from None
    raise GeneratorSpecError(f"unknown generator spec {spec!r}")


__all__ = [
    "DuplicateLineError", "DuplicatePointError", "GeneratorSpecError", "ParseError",
    "format_points", "generate", "grid", "parse_points", "planted", "uniform",
]
