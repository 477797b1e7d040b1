"""Operators, semidirect lifts, and coboundary bialgebras, end to end.

Run:  python demos/03_operator_lift_pipeline.py
"""

from fractions import Fraction

from prenovikov import (
    PreNovikovAlgebra,
    adjoint_reps,
    bialgebra_from_r,
    check_o_operator_pre_novikov,
    co2_equivalence,
    coboundary_maps,
    lift_o_operator,
    ybe_residual,
)
from prenovikov.core import StructureConstants, t3_is_zero

F = Fraction

lhd = StructureConstants.from_rows([
    [[1, 0], [0, 1]],
    [[0, 1], [0, 0]],
])
alg = PreNovikovAlgebra(lhd, StructureConstants.zero(2))
_, adjoint = adjoint_reps(alg)

# The nilpotent map T: e1 -> e2, e2 -> 0 intertwines both products with the
# adjoint actions (columns of the matrix are the images of basis vectors).
T = ((F(0), F(0)), (F(1), F(0)))
print("operator identities hold:", check_o_operator_pre_novikov(alg, adjoint, T).passed)

# Lifting T over the semidirect product with the dual module produces a
# symmetric tensor solving the quadratic tensor equation there.
semi, r = lift_o_operator(alg, adjoint, T)
print("semidirect dimension:", semi.dim)
print("r =", [(i, j, v) for i, row in enumerate(r) for j, v in enumerate(row) if v])
print("residual vanishes:", t3_is_zero(ybe_residual(semi, r)))

# Three equivalent characterizations, computed by independent routes.
print("equivalent verdicts:", co2_equivalence(semi, r))

# The solution induces co-operations; only one value survives and the whole
# package passes the bialgebra verifier.
co = coboundary_maps(semi, r)
nonzero = [
    ("alpha", i, j, k, v)
    for i, t in enumerate(co.alpha)
    for j, row in enumerate(t)
    for k, v in enumerate(row)
    if v
] + [
    ("beta", i, j, k, v)
    for i, t in enumerate(co.beta)
    for j, row in enumerate(t)
    for k, v in enumerate(row)
    if v
]
print("nonzero co-operation values:", nonzero)
bialg = bialgebra_from_r(semi, r)
print("coboundary bialgebra verified:", bialg.report.passed)
