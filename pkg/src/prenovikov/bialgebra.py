"""Pre-Novikov coalgebras, the dual-algebra bridge, and bialgebra verification.

The two co-operations ``alpha`` and ``beta`` are stored exactly like structure
constants: ``alpha[i][j][k]`` is the coefficient of ``e_j (x) e_k`` in
``alpha(e_i)``.  Dualizing is then pure reshaping: ``alpha`` induces the ``<``
product on the dual and ``beta`` the ``>`` product, via
``<f <* g, a> = <f (x) g, alpha(a)>`` and ``<f >* g, a> = <f (x) g, beta(a)>``.

The coalgebra checker always runs both routes: the four co-identities
directly, and the pre-Novikov axioms on the dualized products.  The two
verdicts agreeing is a theorem; a disagreement raises the bug sentinel.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Optional

from . import labels
from .algebras import PreNovikovAlgebra, check_pre_novikov, sum_table
from .core import (
    ZERO,
    InputError,
    InternalCheckError,
    StructureConstants,
    Tensor2,
    Tensor3,
    Vector,
    apply_op,
    basis_vec,
    flip,
    mat_add,
    mat_scale,
    mult_matrix,
    permute3,
    t2_add,
    t2_apply_left,
    t2_apply_right,
    t2_scale,
    t2_sub,
    t2_zero,
    t3_add,
    t3_sub,
    t3_zero,
)
from .report import Report, ReportBuilder, default_labels

CoMaps = tuple[Tensor2, ...]


@dataclass(frozen=True)
class PreNovikovCoalgebra:
    dim: int
    alpha: CoMaps
    beta: CoMaps

    def __post_init__(self):
        n = self.dim
        for name, maps in (("alpha", self.alpha), ("beta", self.beta)):
            if len(maps) != n or any(
                len(t) != n or any(len(row) != n for row in t) for t in maps
            ):
                raise InputError(f"{name} must be an {n}x{n}x{n} array")


@dataclass(frozen=True)
class PreNovikovBialgebra:
    algebra: PreNovikovAlgebra
    coalgebra: PreNovikovCoalgebra
    report: Optional[Report] = None

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise InputError("algebra/coalgebra dimension mismatch")


def comap_eval(maps: CoMaps, v: Vector) -> Tensor2:
    """Evaluate a linearly-extended co-operation on a coordinate vector."""
    out = t2_zero(len(maps))
    for i, c in enumerate(v):
        if c:
            out = t2_add(out, t2_scale(c, maps[i]))
    return out


def coalgebra_to_dual_algebra(co: PreNovikovCoalgebra) -> tuple[StructureConstants, StructureConstants]:
    """The dual-space products: < from alpha, > from beta (pure reshape)."""
    n = co.dim
    lhd = StructureConstants(
        n,
        tuple(tuple(tuple(co.alpha[i][p][q] for i in range(n)) for q in range(n)) for p in range(n)),
    )
    rhd = StructureConstants(
        n,
        tuple(tuple(tuple(co.beta[i][p][q] for i in range(n)) for q in range(n)) for p in range(n)),
    )
    return lhd, rhd


def _co_left(maps: CoMaps, t: Tensor2) -> Tensor3:
    """(gamma (x) id) applied to a rank-2 tensor."""
    n = len(maps)
    out = t3_zero(n)
    for u in range(n):
        for v in range(n):
            c = t[u][v]
            if c:
                out = t3_add(out, _vt3(maps[u], v, c, n, left=True))
    return out


def _vt3(g: Tensor2, fixed: int, c, n: int, left: bool) -> Tensor3:
    """c * (g placed in two slots, basis vector `fixed` in the remaining one)."""
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            gv = g[j][k]
            if not gv:
                continue
            if left:
                out[j][k][fixed] = c * gv
            else:
                out[fixed][j][k] = c * gv
    return tuple(tuple(tuple(row) for row in plane) for plane in out)


def _co_right(maps: CoMaps, t: Tensor2) -> Tensor3:
    """(id (x) gamma) applied to a rank-2 tensor."""
    n = len(maps)
    out = t3_zero(n)
    for u in range(n):
        for v in range(n):
            c = t[u][v]
            if not c:
                continue
            out = t3_add(out, _vt3(maps[v], u, c, n, left=False))
    return out


def check_coalgebra(co: PreNovikovCoalgebra, basis=None) -> Report:
    """Direct co-identity check cross-verified through the dual algebra."""
    t0 = time.perf_counter()
    n = co.dim
    lab = basis or default_labels(n)
    rb = ReportBuilder("coalgebra", labels.COALGEBRA, lab)
    alpha, beta = co.alpha, co.beta
    absum = tuple(t2_add(a, b) for a, b in zip(alpha, beta))
    swap12 = (2, 1, 3)
    swap23 = (1, 3, 2)
    for i in range(n):
        al, be = alpha[i], beta[i]
        res = t3_sub(
            t3_add(_co_left(alpha, al), permute3(_co_right(alpha, be), swap12)),
            t3_add(_co_right(absum, al), permute3(_co_left(beta, al), swap12)),
        )
        _t3_violations(rb, "3.11", (i,), res, n)
        res = t3_sub(
            t3_add(_co_right(beta, be), permute3(_co_left(absum, be), swap12)),
            t3_add(_co_left(absum, be), permute3(_co_right(beta, be), swap12)),
        )
        _t3_violations(rb, "3.12", (i,), res, n)
        res = t3_sub(permute3(_co_left(beta, al), swap23), _co_left(absum, be))
        _t3_violations(rb, "3.13", (i,), res, n)
        res = t3_sub(permute3(_co_left(alpha, al), swap23), _co_left(alpha, al))
        _t3_violations(rb, "3.14", (i,), res, n)
    direct = rb.build(time.perf_counter() - t0)

    lhd_star, rhd_star = coalgebra_to_dual_algebra(co)
    dual_basis = tuple(f"{b}*" for b in lab)
    dual = check_pre_novikov(lhd_star, rhd_star, basis=dual_basis)
    if direct.passed != dual.passed:
        raise InternalCheckError(
            "co-identity check and dual-algebra check disagree "
            f"(direct={direct.passed}, dual={dual.passed})"
        )
    return Report(
        name="coalgebra",
        identities=direct.identities,
        violations=direct.violations,
        sections=(dual,),
        seconds=direct.seconds + dual.seconds,
    )


def _t3_violations(rb: ReportBuilder, identity: str, witness, res: Tensor3, n: int):
    flat = tuple(res[a][b][c] for a in range(n) for b in range(n) for c in range(n))
    rb.residual(identity, witness, flat)


def check_compatibility(alg: PreNovikovAlgebra, co: PreNovikovCoalgebra, basis=None) -> Report:
    """The eight algebra/coalgebra compatibility identities on all basis pairs.

    Each identity is evaluated exactly as displayed, building every operator
    factor (e.g. L> + 2R<) as a matrix and applying it to one tensor leg; no
    algebraic simplification happens first.
    """
    if alg.dim != co.dim:
        raise InputError("algebra/coalgebra dimension mismatch")
    t0 = time.perf_counter()
    n = alg.dim
    rb = ReportBuilder("compatibility", labels.COMPATIBILITY, basis or default_labels(n))
    e = [basis_vec(n, i) for i in range(n)]
    circ = sum_table(alg.lhd, alg.rhd)
    Lo = [mult_matrix(circ, e[i], "left") for i in range(n)]
    Ro = [mult_matrix(circ, e[i], "right") for i in range(n)]
    Lr = [mult_matrix(alg.rhd, e[i], "left") for i in range(n)]
    Rr = [mult_matrix(alg.rhd, e[i], "right") for i in range(n)]
    Ll = [mult_matrix(alg.lhd, e[i], "left") for i in range(n)]
    Rl = [mult_matrix(alg.lhd, e[i], "right") for i in range(n)]

    alpha, beta = co.alpha, co.beta
    ta = tuple(flip(a) for a in alpha)
    tb = tuple(flip(b) for b in beta)

    def ev(maps: CoMaps, v: Vector) -> Tensor2:
        return comap_eval(maps, v)

    def combo(*terms) -> CoMaps:
        out = list(t2_zero(n) for _ in range(n))
        for coeff, maps in terms:
            for i in range(n):
                out[i] = t2_add(out[i], t2_scale(coeff, maps[i]))
        return tuple(out)

    ta_plus_b = combo((1, ta), (1, beta))
    two_ta_plus_b = combo((2, ta), (1, beta))
    a_plus_b = combo((1, alpha), (1, beta))
    a_plus_tb = combo((1, alpha), (1, tb))
    ta_plus_tb = combo((1, ta), (1, tb))
    ab_minus_t = combo((1, alpha), (1, beta), (-1, ta), (-1, tb))

    P_circ = [[apply_op(circ, e[i], e[j]) for j in range(n)] for i in range(n)]
    P_rhd = [[apply_op(alg.rhd, e[i], e[j]) for j in range(n)] for i in range(n)]
    P_lhd = [[apply_op(alg.lhd, e[i], e[j]) for j in range(n)] for i in range(n)]

    for i, j in itertools.product(range(n), repeat=2):
        # 3.16
        lhs = ev(ta_plus_b, P_circ[i][j])
        rhs = t2_add(
            t2_add(
                t2_apply_left(mat_add(Lr[i], mat_scale(2, Rl[i])), ev(ta_plus_b, e[j])),
                t2_apply_right(Lo[i], ev(ta_plus_b, e[j])),
            ),
            t2_sub(
                t2_apply_right(Ro[j], ev(two_ta_plus_b, e[i])),
                t2_apply_left(Rl[j], ta[i]),
            ),
        )
        _t2_violations(rb, "3.16", (i, j), t2_sub(lhs, rhs), n)
        # 3.17
        comm = tuple(P_circ[i][j][t] - P_circ[j][i][t] for t in range(n))
        lhs = ev(ta, comm)
        rhs = t2_sub(
            t2_add(t2_apply_left(mat_add(Lr[i], Rl[i]), ta[j]), t2_apply_right(Lo[i], ta[j])),
            t2_add(t2_apply_left(mat_add(Lr[j], Rl[j]), ta[i]), t2_apply_right(Lo[j], ta[i])),
        )
        _t2_violations(rb, "3.17", (i, j), t2_sub(lhs, rhs), n)
        # 3.18
        odot = tuple(P_rhd[i][j][t] + P_lhd[j][i][t] for t in range(n))
        lhs = ev(a_plus_b, odot)
        rhs = t2_add(
            t2_sub(
                t2_apply_right(mat_add(Rr[j], Ll[j]), ev(two_ta_plus_b, e[i])),
                t2_apply_left(Ll[j], alpha[i]),
            ),
            t2_add(
                t2_apply_left(mat_add(Lr[i], mat_scale(2, Rl[i])), ev(a_plus_b, e[j])),
                t2_apply_right(mat_add(Lr[i], Rl[i]), ev(a_plus_b, e[j])),
            ),
        )
        _t2_violations(rb, "3.18", (i, j), t2_sub(lhs, rhs), n)
        # 3.19
        blhd = P_lhd[j][i]
        lhs = ev(ab_minus_t, blhd)
        rhs = t2_add(
            t2_sub(
                t2_apply_right(Ll[j], ev(ta_plus_b, e[i])),
                t2_apply_left(Ll[j], ev(a_plus_tb, e[i])),
            ),
            t2_sub(
                t2_apply_right(Rl[i], ev(a_plus_b, e[j])),
                t2_apply_left(Rl[i], ev(ta_plus_tb, e[j])),
            ),
        )
        _t2_violations(rb, "3.19", (i, j), t2_sub(lhs, rhs), n)
        # 3.20
        lhs = t2_sub(
            t2_apply_right(Ro[j], ev(ta_plus_b, e[i])),
            t2_apply_left(Rl[j], ev(ta_plus_b, e[i])),
        )
        rhs = t2_sub(
            t2_apply_right(Ro[i], ev(ta_plus_b, e[j])),
            t2_apply_left(Rl[i], ev(ta_plus_b, e[j])),
        )
        _t2_violations(rb, "3.20", (i, j), t2_sub(lhs, rhs), n)
        # 3.21
        lhs = ev(ta, P_circ[i][j])
        rhs = t2_add(
            t2_apply_right(Ro[j], ta[i]),
            t2_apply_left(mat_add(Lr[i], Rl[i]), ev(ta_plus_b, e[j])),
        )
        _t2_violations(rb, "3.21", (i, j), t2_sub(lhs, rhs), n)
        # 3.22
        lhs = t2_apply_right(mat_add(Rr[j], Ll[j]), ta[i])
        rhs = t2_sub(
            t2_add(
                t2_apply_left(mat_add(Rr[j], Ll[j]), alpha[i]),
                t2_apply_right(mat_add(Lr[i], Rl[i]), ev(ta_plus_tb, e[j])),
            ),
            t2_apply_left(mat_add(Lr[i], Rl[i]), ev(a_plus_b, e[j])),
        )
        _t2_violations(rb, "3.22", (i, j), t2_sub(lhs, rhs), n)
        # 3.23
        lhs = ev(a_plus_b, P_lhd[j][i])
        rhs = t2_add(
            t2_apply_right(mat_add(Rr[j], Ll[j]), ev(ta_plus_b, e[i])),
            t2_apply_left(Rl[i], ev(a_plus_b, e[j])),
        )
        _t2_violations(rb, "3.23", (i, j), t2_sub(lhs, rhs), n)
    return rb.build(time.perf_counter() - t0)


def _t2_violations(rb: ReportBuilder, identity: str, witness, res: Tensor2, n: int):
    flat = tuple(res[a][b] for a in range(n) for b in range(n))
    rb.residual(identity, witness, flat)


def check_bialgebra(alg: PreNovikovAlgebra, co: PreNovikovCoalgebra, basis=None) -> Report:
    """Algebra axioms + coalgebra axioms + the eight compatibility identities."""
    if alg.dim != co.dim:
        raise InputError("algebra/coalgebra dimension mismatch")
    t0 = time.perf_counter()
    sections = (
        check_pre_novikov(alg.lhd, alg.rhd, basis=basis),
        check_coalgebra(co, basis=basis),
        check_compatibility(alg, co, basis=basis),
    )
    return Report(
        name="bialgebra",
        sections=sections,
        seconds=time.perf_counter() - t0,
    )
