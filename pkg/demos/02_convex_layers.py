"""
Convex layers and sorted pieces
===============================

Peel a point set into convex layers, then look at how a single layer splits
into pieces that are already sorted by folded angle around a pivot. Merging
those pieces with a heap gives the same order as a full angular sort.
"""

from collinear import PointSet, build_merged, heap_merge, peel, split_layer, tangents
from collinear.layers import LayerDecomposition, piece_vertices, split_all

###############################################################################
# Peeling a 5x5 grid gives three layers: the 16-point border, the 8-point
# ring inside it, and the centre.
ps = PointSet((x, y) for y in range(5) for x in range(5))
dec = peel(ps)
print("depth", dec.depth, [len(layer) for layer in dec.layers])

###############################################################################
# Seen from the centre point (index 12), the border surrounds the pivot. From
# the corner (0, 0) the inner ring lies outside, between two tangent points;
# from its own layer the pivot just splits the boundary.
outer, ring = dec.layers[0], dec.layers[1]
print(tangents(12, outer, ps))
print(tangents(0, ring, ps))
print(tangents(0, outer, ps))

###############################################################################
# Each layer becomes at most four pieces, stored as index ranges.
single = LayerDecomposition((outer,))
for piece in split_layer(12, outer, ps):
    print(piece, [tuple(ps[i]) for i in piece_vertices(piece, single)])

###############################################################################
# The heap merge reproduces the sorted order exactly.
for p in range(len(ps)):
    merged = [q for _, q in heap_merge(p, split_all(p, dec, ps), dec, ps)]
    assert merged == list(build_merged(p, ps).order)
print("heap merge matches the full sort for all", len(ps), "pivots")
