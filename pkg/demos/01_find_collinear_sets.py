"""
Finding maximal collinear subsets
=================================

Build a point set, enumerate every maximal set of three or more collinear
points, and check the answer against brute force.
"""

from collinear import PointSet, brute_force, enumerate_layered, generate

###############################################################################
# A hand-made point set: a horizontal row, a diagonal and two stray points.
ps = PointSet([(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 2), (5, 1), (4, 3)])

result = enumerate_layered(ps)
for members in result.sets:
    print(members, [tuple(ps[i]) for i in members])

###############################################################################
# Sets are reported as ascending point indices, and the collection itself is
# sorted, so the output is canonical. The brute-force oracle agrees.
assert result.sets == brute_force(ps).sets

###############################################################################
# Generators cover lattices, uniform noise and planted lines.
grid = generate("grid:5x5")
print(len(enumerate_layered(grid)), "maximal lines in a 5x5 grid")

lines = generate("planted:lines=3,per_line=6,noise=10,box=20", seed=7)
big = [s for s in enumerate_layered(lines).sets if len(s) >= 6]
print(len(big), "sets of six or more points among", len(lines), "points")
