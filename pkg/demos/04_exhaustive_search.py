"""Brute-force search for symmetric solutions, with every hit re-verified.

Run:  python demos/04_exhaustive_search.py
"""

import time
from fractions import Fraction

from prenovikov import (
    PreNovikovAlgebra,
    adjoint_reps,
    bialgebra_from_r,
    coboundary_diagnostics,
    lift_o_operator,
    search_symmetric_ybe,
)
from prenovikov.core import StructureConstants

F = Fraction

lhd = StructureConstants.from_rows([
    [[1, 0], [0, 1]],
    [[0, 1], [0, 0]],
])
alg = PreNovikovAlgebra(lhd, StructureConstants.zero(2))

sols = search_symmetric_ybe(alg, [-1, 0, 1])
print(f"dim 2, entries in -1..1: {len(sols)} solutions")
for s in sols:
    print("  ", s)

# The four-dimensional semidirect algebra has a much richer solution set;
# enumeration covers 3^10 = 59049 symmetric candidates.
_, adjoint = adjoint_reps(alg)
T = ((F(0), F(0)), (F(1), F(0)))
semi, r = lift_o_operator(alg, adjoint, T)
t0 = time.time()
sols4 = search_symmetric_ybe(semi, [-1, 0, 1])
print(f"dim 4, entries in -1..1: {len(sols4)} solutions in {time.time() - t0:.2f}s")
print("lifted tensor among them:", r in sols4)

# Every solution gives a verified coboundary bialgebra, and its named
# diagnostic tensors all vanish.
for s in sols4:
    assert bialgebra_from_r(semi, s).report.passed
    d = coboundary_diagnostics(semi, s)
    assert d.conditions_zero() and d.equations_zero() and d.r_tensors_zero()
print("all solutions pass the coboundary pipeline and diagnostics")
