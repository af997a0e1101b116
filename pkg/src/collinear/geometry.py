"""Exact integer predicates for planar point sets.

Nothing here computes an angle. Directions are compared with integer cross
products, which Python evaluates exactly at any width. Coordinates are still
bounded by ``COORD_BOUND`` so every intermediate has a known size:

* coordinate differences are at most 2**31 in magnitude,
* a single product of differences is at most 2**62,
* a cross product or squared distance is at most 2**63.

The bound matters for anyone porting the predicates to fixed-width integers:
compare the two products of a cross product directly instead of subtracting
them and nothing exceeds a signed 64-bit word.
"""
from __future__ import annotations

import random
from typing import Iterable, NamedTuple, Sequence

COORD_BOUND = 1 << 30

# Width of the fields packed into a folded sort key (see ``folded_key``).
ANGLE_SCALE_BITS = 66
_DIST_BITS = 64
_LOWER_BIT = 1 << _DIST_BITS
ANGLE_SHIFT = _DIST_BITS + 1
_HALF_TURN = 1 << ANGLE_SCALE_BITS


class GeometryError(ValueError):
    """Raised for point data that violates an input contract."""


class DuplicatePointError(GeometryError):
    def __init__(self, first: int, second: int, point):
        self.first = first
        self.second = second
        self.point = point
        super().__init__(
            f"duplicate point {tuple(point)} at indices {first} and {second}")


class CoordinateRangeError(GeometryError):
    pass


class Point(NamedTuple):
    x: int
    y: int


class FoldedDirection(NamedTuple):
    """Direction from a pivot, folded into the upper half-plane.

    ``from_lower_half`` is True when the unfolded direction pointed at an
    angle in [pi, 2*pi), i.e. the point was moved onto its antipode.
    """
    dx: int
    dy: int
    from_lower_half: bool


def check_coordinate(value, *, what: str = "coordinate") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            as_int = int(value)
        except (TypeError, ValueError):
            raise CoordinateRangeError(f"{what} {value!r} is not an integer") from None
        if as_int != value:
            raise CoordinateRangeError(f"{what} {value!r} is not an integer")
        value = as_int
    if not -COORD_BOUND <= value <= COORD_BOUND:
        raise CoordinateRangeError(
            f"{what} {value} outside [-2**30, 2**30]")
    return value


class PointSet(Sequence[Point]):
    """Immutable indexed collection of distinct integer points.

    The position of a point in the collection is its identity; every result
    in this package refers to points by index.
    """

    __slots__ = ("_points", "xs", "ys")

    def __init__(self, points: Iterable):
        pts = []
        seen: dict[Point, int] = {}
        for i, pt in enumerate(points):
            x, y = pt
            p = Point(check_coordinate(x, what=f"x of point {i}"),
                      check_coordinate(y, what=f"y of point {i}"))
            if p in seen:
                raise DuplicatePointError(seen[p], i, p)
            seen[p] = i
            pts.append(p)
        if not pts:
            raise GeometryError("a point set needs at least one point")
        self._points = tuple(pts)
        self.xs = tuple(p.x for p in pts)
        self.ys = tuple(p.y for p in pts)

    def __getitem__(self, i):
        return self._points[i]

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        if len(self) <= 6:
            body = ", ".join(f"({p.x}, {p.y})" for p in self._points)
        else:
            body = f"{len(self)} points"
        return f"PointSet([{body}])"

    def as_tuples(self) -> list[tuple[int, int]]:
        return [(p.x, p.y) for p in self._points]


class SigmaOrder:
    """Processing order of the pivots; ``rank[i]`` is the position of point i."""

    __slots__ = ("rank", "order")

    def __init__(self, order: Sequence[int]):
        order = tuple(int(i) for i in order)
        n = len(order)
        rank = [-1] * n
        for pos, i in enumerate(order):
            if not 0 <= i < n or rank[i] != -1:
                raise ValueError("sigma order must be a permutation of 0..n-1")
            rank[i] = pos
        self.order = order
        self.rank = tuple(rank)

    @classmethod
    def identity(cls, n: int) -> "SigmaOrder":
        return cls(range(n))

    @classmethod
    def shuffled(cls, n: int, seed: int) -> "SigmaOrder":
        order = list(range(n))
        random.Random(seed).shuffle(order)
        return cls(order)

    @classmethod
    def from_rank(cls, rank: Sequence[int]) -> "SigmaOrder":
        order = [0] * len(rank)
        for i, r in enumerate(rank):
            order[r] = i
        return cls(order)

    def __len__(self) -> int:
        return len(self.order)

    def __repr__(self) -> str:
        return f"SigmaOrder({list(self.order)!r})"


def orient(a, b, c) -> int:
    """Sign of (b - a) x (c - a): +1 counterclockwise, -1 clockwise, 0 collinear."""
    lhs = (b[0] - a[0]) * (c[1] - a[1])
    rhs = (b[1] - a[1]) * (c[0] - a[0])
    return (lhs > rhs) - (lhs < rhs)


def squared_distance(p, q) -> int:
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    return dx * dx + dy * dy


def fold_direction(p, q) -> FoldedDirection:
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dy > 0 or (dy == 0 and dx > 0):
        return FoldedDirection(dx, dy, False)
    if dx == 0 and dy == 0:
        raise GeometryError(f"cannot fold the direction from {tuple(p)} to itself")
    return FoldedDirection(-dx, -dy, True)


def cmp_folded(u: FoldedDirection, u_dist2: int,
               v: FoldedDirection, v_dist2: int) -> int:
    """Three-way comparison of two points around a common pivot.

    Folded angle first (by cross product sign; both vectors lie in the
    upper half-plane so the sign is an angular comparison), then points that
    were not folded before folded ones, then nearer before farther.
    """
    lhs = u.dx * v.dy
    rhs = u.dy * v.dx
    if lhs != rhs:
        return -1 if lhs > rhs else 1
    if u.from_lower_half != v.from_lower_half:
        return 1 if u.from_lower_half else -1
    return (u_dist2 > v_dist2) - (u_dist2 < v_dist2)


def pseudo_angle(fx: int, fy: int) -> int:
    """Exact order-preserving integer image of a folded direction's angle.

    Uses the diamond angle t in [0, 2): t = fy/(fx+fy) for fx >= 0 and
    t = 1 + (-fx)/(fy-fx) otherwise, scaled by 2**66 and floored. Both
    denominators are at most 2**32, so distinct directions differ in t by at
    least 2**-64 and land on integers at least 4 apart; equal directions give
    equal t. The floor is therefore strictly monotone on directions.
    """
    if fx >= 0:
        return (fy << ANGLE_SCALE_BITS) // (fx + fy)
    return _HALF_TURN + ((-fx) << ANGLE_SCALE_BITS) // (fy - fx)


def folded_key(px: int, py: int, qx: int, qy: int) -> int:
    """Single-integer sort key realising ``cmp_folded`` around pivot (px, py).

    Layout, most significant first: pseudo-angle, lower-half flag, squared
    distance (< 2**64). Integer comparison of keys agrees with cmp_folded,
    and distinct points always get distinct keys.
    """
    dx = qx - px
    dy = qy - py
    if dy > 0 or (dy == 0 and dx > 0):
        if dx >= 0:
            a = (dy << ANGLE_SCALE_BITS) // (dx + dy)
        else:
            a = _HALF_TURN + ((-dx) << ANGLE_SCALE_BITS) // (dy - dx)
        return (a << ANGLE_SHIFT) | (dx * dx + dy * dy)
    # folded: (-dx, -dy)
    if dx <= 0:
        a = ((-dy) << ANGLE_SCALE_BITS) // (-dx - dy)
    else:
        a = _HALF_TURN + (dx << ANGLE_SCALE_BITS) // (dx - dy)
    return (a << ANGLE_SHIFT) | _LOWER_BIT | (dx * dx + dy * dy)


def key_direction(key: int) -> int:
    """The pseudo-angle field of a folded key; equal iff same folded direction."""
    return key >> ANGLE_SHIFT


def key_is_lower(key: int) -> bool:
    return bool(key & _LOWER_BIT)
