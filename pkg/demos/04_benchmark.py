"""
Comparing strategies
====================

Time the three strategies on a lattice and on a planted-lines set. The
command-line equivalent is ``collinear --gen grid:30x30 --seed 0 --bench``.
"""

from collinear import generate
from collinear.bench import format_table, run_bench

for spec in ("grid:30x30", "planted:lines=5,per_line=120,noise=100"):
    ps = generate(spec, seed=0)
    print(spec)
    print(format_table(ps, run_bench(ps, workers=(1, 2))))
    print()
