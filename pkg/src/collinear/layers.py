"""Convex layers, their split into angularly sorted pieces, and the heap merge.

A convex polygon seen from an outside point consists of a near chain and a
far chain between the two tangent points; each chain is sorted by angle.
From an inside point the whole boundary is one sorted cycle. Cutting every
chain where it crosses the horizontal through the pivot leaves pieces that
are sorted by folded angle, so a k-way heap merge of the pieces reproduces
the folded cyclic order without sorting.

Pieces are stored as index ranges into a layer, never as copies.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .geometry import PointSet, folded_key, orient


@dataclass(frozen=True)
class ConvexLayer:
    """Boundary of a convex hull, counterclockwise, with points on edges kept.

    A degenerate layer (one point, two points, or a collinear chain) is stored
    in lexicographic order along its line.
    """
    vertices: tuple[int, ...]
    degenerate: bool = False
    _position: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_position",
                           {v: pos for pos, v in enumerate(self.vertices)})

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, index: int):
        """Position of point ``index`` on this layer, or None."""
        return self._position.get(index)


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[ConvexLayer, ...]

    @property
    def depth(self) -> int:
        return len(self.layers)

    def check_partition(self, n: int) -> None:
        """Raise ValueError unless the layers cover 0..n-1 exactly once."""
        seen = sorted(v for layer in self.layers for v in layer.vertices)
        if seen != list(range(n)):
            raise ValueError("layers do not partition the point set")


class SortedSubsequence(NamedTuple):
    """``length`` vertices of layer ``layer`` starting at ``start``, stepping by ``step``.

    ``step`` is +1 (boundary order) or -1 (reverse); positions wrap modulo
    the layer size.
    """
    layer: int
    start: int
    length: int
    step: int


def piece_vertices(piece: SortedSubsequence,
                   decomposition: LayerDecomposition) -> list[int]:
    verts = decomposition.layers[piece.layer].vertices
    k = len(verts)
    return [verts[(piece.start + piece.step * t) % k] for t in range(piece.length)]


# -- hulls and peeling -------------------------------------------------------

def convex_hull_with_collinear(ps: PointSet,
                               indices: Iterable[int] | None = None) -> ConvexLayer:
    """Monotone chain hull that only discards strictly interior points."""
    xs, ys = ps.xs, ps.ys
    if indices is None:
        indices = range(len(ps))
    idx = sorted(indices, key=lambda i: (xs[i], ys[i]))
    if not idx:
        raise ValueError("hull of an empty set")
    if len(idx) <= 2:
        return ConvexLayer(tuple(idx), degenerate=True)
    a, b = ps[idx[0]], ps[idx[-1]]
    if all(orient(a, b, ps[i]) == 0 for i in idx):
        return ConvexLayer(tuple(idx), degenerate=True)

    def half(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and orient(ps[chain[-2]], ps[chain[-1]], ps[i]) < 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(idx)
    upper = half(reversed(idx))
    return ConvexLayer(tuple(lower[:-1] + upper[:-1]))


def peel(ps: PointSet) -> LayerDecomposition:
    """Convex hull peeling: strip hulls (collinear boundary points included) until empty."""
    remaining = list(range(len(ps)))
    layers = []
    while remaining:
        layer = convex_hull_with_collinear(ps, remaining)
        layers.append(layer)
        taken = set(layer.vertices)
        remaining = [i for i in remaining if i not in taken]
    return LayerDecomposition(tuple(layers))


# -- tangents ----------------------------------------------------------------

class DegenerateLayerError(ValueError):
    """Tangent logic needs a polygon with three non-collinear vertices."""


@dataclass(frozen=True)
class Inside:
    """Pivot strictly inside, or (``edge`` set) strictly inside boundary edge
    (vertices[edge], vertices[edge + 1])."""
    edge: int | None = None


@dataclass(frozen=True)
class Outside:
    """Positions of the tangent points: ``i`` bounds the layer clockwise
    (smallest angle seen from the pivot), ``j`` counterclockwise. Each is
    the vertex nearest the pivot on its tangent line."""
    i: int
    j: int


@dataclass(frozen=True)
class PivotOnLayer:
    position: int
    chain: tuple[int, ...]


Classification = Union[Inside, Outside, PivotOnLayer]


def _dist2(px, py, qx, qy):
    dx = qx - px
    dy = qy - py
    return dx * dx + dy * dy


def _classify(px, py, verts, xs, ys) -> tuple[str, int, int]:
    k = len(verts)
    on_edge = -1
    for e in range(k):
        u = verts[e]
        v = verts[e + 1 if e + 1 < k else 0]
        ux, uy, vx, vy = xs[u], ys[u], xs[v], ys[v]
        lhs = (vx - ux) * (py - uy)
        rhs = (vy - uy) * (px - ux)
        if lhs < rhs:
            break
        if lhs == rhs and on_edge < 0:
            if ((px - ux) * (vx - ux) + (py - uy) * (vy - uy) > 0
                    and (px - vx) * (ux - vx) + (py - vy) * (uy - vy) > 0):
                on_edge = e
    else:
        return ("inside", on_edge, -1)

    # Outside: the layer spans less than a half turn from p, so orient gives
    # a total preorder on directions; ties go to the nearer vertex.
    lo = hi = verts[0]
    i = j = 0
    for pos in range(1, k):
        q = verts[pos]
        qx, qy = xs[q], ys[q]
        o = (xs[lo] - px) * (qy - py) - (ys[lo] - py) * (qx - px)
        if o < 0 or (o == 0 and _dist2(px, py, qx, qy) < _dist2(px, py, xs[lo], ys[lo])):
            lo, i = q, pos
        o = (xs[hi] - px) * (qy - py) - (ys[hi] - py) * (qx - px)
        if o > 0 or (o == 0 and _dist2(px, py, qx, qy) < _dist2(px, py, xs[hi], ys[hi])):
            hi, j = q, pos
    return ("outside", i, j)


def tangents(p, layer: ConvexLayer, ps: PointSet) -> Classification:
    """Classify pivot ``p`` (a point index or a coordinate pair) against ``layer``."""
    if layer.degenerate or len(layer) < 3:
        raise DegenerateLayerError("layer has fewer than three non-collinear vertices")
    if isinstance(p, int):
        pos = layer.position(p)
        px, py = ps.xs[p], ps.ys[p]
    else:
        px, py = p
        pos = next((t for t, v in enumerate(layer.vertices)
                    if ps.xs[v] == px and ps.ys[v] == py), None)
    verts = layer.vertices
    if pos is not None:
        k = len(verts)
        return PivotOnLayer(pos, tuple(verts[(pos + t) % k] for t in range(1, k)))
    kind, a, b = _classify(px, py, verts, ps.xs, ps.ys)
    if kind == "inside":
        return Inside(a if a >= 0 else None)
    return Outside(a, b)


# -- splitting ---------------------------------------------------------------

def _is_lower(px, py, qx, qy) -> bool:
    dy = qy - py
    return dy < 0 or (dy == 0 and qx < px)


def _cut_halves(lid, start, length, step, verts, px, py, xs, ys, out):
    """Append the pieces of a chain cut wherever it crosses the horizontal."""
    if length <= 0:
        return
    k = len(verts)
    piece_start = start
    pos = start
    q = verts[pos % k]
    flag = _is_lower(px, py, xs[q], ys[q])
    count = 1
    for _ in range(length - 1):
        pos += step
        q = verts[pos % k]
        f = _is_lower(px, py, xs[q], ys[q])
        if f != flag:
            out.append(SortedSubsequence(lid, piece_start % k, count, step))
            piece_start = pos
            count = 0
            flag = f
        count += 1
    out.append(SortedSubsequence(lid, piece_start % k, count, step))


def _ray_group_back(px, py, end, max_len, verts, xs, ys) -> int:
    """Vertices on the ray from p through verts[end], walking backwards from end."""
    k = len(verts)
    e = verts[end % k]
    ex, ey = xs[e] - px, ys[e] - py
    g = 1
    while g < max_len:
        q = verts[(end - g) % k]
        qx, qy = xs[q] - px, ys[q] - py
        if ex * qy != ey * qx or ex * qx + ey * qy <= 0:
            break
        g += 1
    return g


def _split_boundary_chain(lid, start, length, verts, px, py, xs, ys, out):
    # Counterclockwise chain seen from a pivot on the boundary. Its last ray
    # is walked away from the pivot's neighbour, so vertices on that ray come
    # out farthest first; they form their own reversed piece.
    end = start + length - 1
    g = _ray_group_back(px, py, end, length - 1, verts, xs, ys)
    if g == 1:
        _cut_halves(lid, start, length, 1, verts, px, py, xs, ys, out)
        return
    _cut_halves(lid, start, length - g, 1, verts, px, py, xs, ys, out)
    _cut_halves(lid, end, g, -1, verts, px, py, xs, ys, out)


def _split_degenerate(lid, p, px, py, verts, xs, ys, out):
    k = len(verts)
    if k == 1:
        if verts[0] != p:
            out.append(SortedSubsequence(lid, 0, 1, 1))
        return
    a, b = verts[0], verts[-1]
    o = orient((xs[a], ys[a]), (xs[b], ys[b]), (px, py))
    if o == 0:
        # pivot on the line: one ray on each side, each walked outward
        before = sum(1 for v in verts if (xs[v], ys[v]) < (px, py))
        after_start = before + 1 if before < k and verts[before] == p else before
        if before:
            out.append(SortedSubsequence(lid, before - 1, before, -1))
        if after_start < k:
            out.append(SortedSubsequence(lid, after_start, k - after_start, 1))
        return
    if o > 0:
        _cut_halves(lid, 0, k, 1, verts, px, py, xs, ys, out)
    else:
        _cut_halves(lid, k - 1, k, -1, verts, px, py, xs, ys, out)


def _split_into(lid, layer: ConvexLayer, p, px, py, xs, ys, out):
    verts = layer.vertices
    k = len(verts)
    if layer.degenerate:
        _split_degenerate(lid, p, px, py, verts, xs, ys, out)
        return
    pos = layer.position(p) if p is not None else None
    if pos is not None:
        _split_boundary_chain(lid, pos + 1, k - 1, verts, px, py, xs, ys, out)
        return
    kind, i, j = _classify(px, py, verts, xs, ys)
    if kind == "inside":
        if i >= 0:
            _split_boundary_chain(lid, i + 1, k, verts, px, py, xs, ys, out)
            return
        # Rotate the cycle to a half-plane crossing; the arcs between the
        # crossings are the pieces.
        flags = [_is_lower(px, py, xs[v], ys[v]) for v in verts]
        s = next((t for t in range(k) if flags[t] != flags[t - 1]), 0)
        _cut_halves(lid, s, k, 1, verts, px, py, xs, ys, out)
        return
    # Outside. The near chain runs backwards from tangent i to tangent j and
    # takes the vertices beyond j on j's tangent line; the far chain is the
    # rest, run forwards from i + 1.
    g = _ray_group_back(px, py, j, k, verts, xs, ys)
    near = (i - (j - g + 1)) % k + 1
    _cut_halves(lid, i, near, -1, verts, px, py, xs, ys, out)
    _cut_halves(lid, (i + 1) % k, k - near, 1, verts, px, py, xs, ys, out)


def split_layer(p: int, layer: ConvexLayer, ps: PointSet,
                layer_id: int = 0) -> list[SortedSubsequence]:
    """Cut ``layer`` into at most four index ranges, each strictly increasing
    in folded order around point ``p``. ``p`` itself is never covered."""
    out: list[SortedSubsequence] = []
    _split_into(layer_id, layer, p, ps.xs[p], ps.ys[p], ps.xs, ps.ys, out)
    return out


def split_all(p: int, decomposition: LayerDecomposition,
              ps: PointSet) -> list[SortedSubsequence]:
    xs, ys = ps.xs, ps.ys
    px, py = xs[p], ys[p]
    out: list[SortedSubsequence] = []
    for lid, layer in enumerate(decomposition.layers):
        _split_into(lid, layer, p, px, py, xs, ys, out)
    return out


# -- merging -----------------------------------------------------------------

def heap_merge(p: int, pieces: Sequence[SortedSubsequence],
               decomposition: LayerDecomposition, ps: PointSet,
               validate: bool = False) -> Iterator[tuple[int, int]]:
    """Yield (folded key, point index) for every point in the pieces, in order.

    The heap holds one entry per unexhausted piece.
    """
    xs, ys = ps.xs, ps.ys
    px, py = xs[p], ys[p]
    vert_lists = [layer.vertices for layer in decomposition.layers]
    heap = []
    for pid, (lid, start, length, step) in enumerate(pieces):
        if length:
            q = vert_lists[lid][start]
            heap.append((folded_key(px, py, xs[q], ys[q]), pid, 0, q))
    heapq.heapify(heap)
    last = -1
    while heap:
        key, pid, pos, q = heap[0]
        if validate and key <= last:
            raise ValueError(
                f"piece {pieces[pid]} is not increasing around pivot {p}")
        last = key
        yield key, q
        lid, start, length, step = pieces[pid]
        pos += 1
        if pos < length:
            verts = vert_lists[lid]
            nq = verts[(start + step * pos) % len(verts)]
            heapq.heapreplace(heap, (folded_key(px, py, xs[nq], ys[nq]), pid, pos, nq))
        else:
            heapq.heappop(heap)
