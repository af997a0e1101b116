import itertools
from functools import cmp_to_key

import pytest
from hypothesis import given, strategies as st

from collinear.geometry import (
    COORD_BOUND,
    CoordinateRangeError,
    DuplicatePointError,
    FoldedDirection,
    GeometryError,
    PointSet,
    SigmaOrder,
    cmp_folded,
    fold_direction,
    folded_key,
    key_direction,
    orient,
    squared_distance,
)

coord = st.integers(-COORD_BOUND, COORD_BOUND)
small = st.integers(-8, 8)
points = st.tuples(coord, coord)


def test_orient_examples():
    assert orient((0, 0), (1, 0), (2, 0)) == 0
    assert orient((0, 0), (1, 0), (1, 1)) == 1
    assert orient((0, 0), (1, 1), (1, 0)) == -1


@pytest.mark.parametrize("p, q, expected", [
    ((0, 0), (2, 3), FoldedDirection(2, 3, False)),
    ((0, 0), (0, -1), FoldedDirection(0, 1, True)),
    ((0, 0), (-1, 0), FoldedDirection(1, 0, True)),
    ((0, 0), (1, 0), FoldedDirection(1, 0, False)),
])
def test_fold_direction_examples(p, q, expected):
    assert fold_direction(p, q) == expected


def test_fold_direction_rejects_same_point():
    with pytest.raises(GeometryError):
        fold_direction((3, 4), (3, 4))


def test_cmp_folded_examples():
    assert cmp_folded(FoldedDirection(1, 0, False), 1, FoldedDirection(0, 1, False), 1) == -1
    assert cmp_folded(FoldedDirection(1, 1, False), 2, FoldedDirection(2, 2, False), 8) == -1
    assert cmp_folded(FoldedDirection(1, 0, False), 1, FoldedDirection(1, 0, True), 1) == -1


@given(points, points, points)
def test_orient_antisymmetric(a, b, c):
    assert orient(a, b, c) == -orient(a, c, b)
    assert orient(a, b, c) == orient(b, c, a)


@given(points, points, points)
def test_collinear_iff_folded_cross_zero(p, q, r):
    if p == q or p == r:
        return
    u, v = fold_direction(p, q), fold_direction(p, r)
    assert (orient(p, q, r) == 0) == (u.dx * v.dy == u.dy * v.dx)


@given(points, points)
def test_folded_vector_in_upper_half_plane(p, q):
    if p == q:
        return
    d = fold_direction(p, q)
    assert d.dy > 0 or (d.dy == 0 and d.dx > 0)


def _cmp(p):
    def c(q, r):
        return cmp_folded(fold_direction(p, q), squared_distance(p, q),
                          fold_direction(p, r), squared_distance(p, r))
    return c


@given(st.tuples(small, small),
       st.lists(st.tuples(small, small), min_size=3, max_size=3, unique=True))
def test_cmp_folded_strict_total_order(p, qs):
    if p in qs:
        return
    c = _cmp(p)
    a, b, d = qs
    assert c(a, a) == 0
    assert c(a, b) == -c(b, a) != 0
    if c(a, b) < 0 and c(b, d) < 0:
        assert c(a, d) < 0


@given(points, st.lists(points, min_size=1, max_size=25, unique=True))
def test_folded_key_realises_cmp_folded(p, qs):
    qs = [q for q in qs if q != p]
    by_cmp = sorted(qs, key=cmp_to_key(_cmp(p)))
    by_key = sorted(qs, key=lambda q: folded_key(*p, *q))
    assert by_cmp == by_key
    keys = [folded_key(*p, *q) for q in qs]
    assert len(set(keys)) == len(keys)


@given(points, points, points)
def test_key_direction_equal_iff_collinear(p, q, r):
    if p in (q, r):
        return
    same = key_direction(folded_key(*p, *q)) == key_direction(folded_key(*p, *r))
    assert same == (orient(p, q, r) == 0)


@given(st.tuples(small, small), st.lists(st.tuples(small, small), max_size=30, unique=True))
def test_adjacent_equal_direction_iff_collinear(p, qs):
    qs = sorted((q for q in qs if q != p), key=lambda q: folded_key(*p, *q))
    for a, b in zip(qs, qs[1:]):
        same = fold_direction(p, a)[:2] == fold_direction(p, b)[:2]
        # equal folded vectors are not required, only parallel ones
        parallel = key_direction(folded_key(*p, *a)) == key_direction(folded_key(*p, *b))
        assert parallel == (orient(p, a, b) == 0)
        if same:
            assert parallel


EXTREMES = [-COORD_BOUND, -COORD_BOUND + 1, -1, 0, 1, COORD_BOUND - 1, COORD_BOUND]


def test_boundary_magnitudes_exhaustive():
    corners = [(x, y) for x in EXTREMES for y in EXTREMES]
    # every triple from a reduced extreme set; orient must match the exact
    # determinant and stay within the documented 2**63 bound
    sub = [(x, y) for x in EXTREMES[::2] for y in EXTREMES[::2]]
    for a, b, c in itertools.product(sub, repeat=3):
        lhs = (b[0] - a[0]) * (c[1] - a[1])
        rhs = (b[1] - a[1]) * (c[0] - a[0])
        assert abs(lhs) <= 1 << 62 and abs(rhs) <= 1 << 62
        assert abs(lhs - rhs) <= 1 << 63
        assert orient(a, b, c) == (lhs > rhs) - (lhs < rhs)
        assert orient(a, b, c) == -orient(a, c, b)
    for p in corners:
        others = [q for q in corners if q != p]
        keys = [folded_key(*p, *q) for q in others]
        assert len(set(keys)) == len(keys)
        by_cmp = sorted(others, key=cmp_to_key(_cmp(p)))
        assert by_cmp == sorted(others, key=lambda q: folded_key(*p, *q))
        for q in others:
            assert squared_distance(p, q) <= 1 << 63


def test_extreme_near_parallel_directions_are_distinguished():
    p = (-COORD_BOUND, -COORD_BOUND)
    q = (COORD_BOUND, COORD_BOUND - 1)
    r = (COORD_BOUND - 1, COORD_BOUND - 2)
    assert orient(p, q, r) != 0
    assert key_direction(folded_key(*p, *q)) != key_direction(folded_key(*p, *r))
    assert (folded_key(*p, *q) < folded_key(*p, *r)) == (_cmp(p)(q, r) < 0)


def test_pointset_rejects_duplicates():
    with pytest.raises(DuplicatePointError) as err:
        PointSet([(0, 0), (1, 2), (0, 0)])
    assert (err.value.first, err.value.second) == (0, 2)


@pytest.mark.parametrize("bad", [COORD_BOUND + 1, -COORD_BOUND - 1, 0.5, "x"])
def test_pointset_rejects_out_of_range(bad):
    with pytest.raises(CoordinateRangeError):
        PointSet([(bad, 0)])


def test_pointset_accepts_bound():
    ps = PointSet([(COORD_BOUND, -COORD_BOUND)])
    assert ps[0] == (COORD_BOUND, -COORD_BOUND)


def test_pointset_needs_a_point():
    with pytest.raises(GeometryError):
        PointSet([])


def test_sigma_order():
    s = SigmaOrder([2, 0, 1])
    assert s.rank == (1, 2, 0)
    assert SigmaOrder.from_rank(s.rank).order == s.order
    with pytest.raises(ValueError):
        SigmaOrder([0, 0, 1])
    assert sorted(SigmaOrder.shuffled(10, 3).order) == list(range(10))
    assert SigmaOrder.shuffled(10, 3).order == SigmaOrder.shuffled(10, 3).order


@given(points, points)
def test_key_angle_field_is_pseudo_angle(p, q):
    from collinear.geometry import pseudo_angle
    if p == q:
        return
    d = fold_direction(p, q)
    assert key_direction(folded_key(*p, *q)) == pseudo_angle(d.dx, d.dy)
