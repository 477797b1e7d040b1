"""Novikov and pre-Novikov algebra data, axiom verifiers, and derived products.

Verifiers never assume the axioms hold; constructors that need a verified
premise run the matching checker themselves and refuse (with the failing
report) when it does not pass.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import labels
from .core import (
    InputError,
    InternalCheckError,
    Matrix,
    RefusalError,
    Scalar,
    StructureConstants,
    Vector,
    apply_op,
    basis_vec,
    exact_det,
    mat_inverse,
    mat_neg,
    mat_transpose,
    mat_vec,
    mult_matrix,
    vec_add,
    vec_sub,
)
from .report import Report, ReportBuilder, default_labels


@dataclass(frozen=True)
class NovikovAlgebra:
    op: StructureConstants

    @property
    def dim(self) -> int:
        return self.op.dim


@dataclass(frozen=True)
class PreNovikovAlgebra:
    lhd: StructureConstants
    rhd: StructureConstants

    def __post_init__(self):
        if self.lhd.dim != self.rhd.dim:
            raise InputError("the two product tables must share a dimension")

    @property
    def dim(self) -> int:
        return self.lhd.dim


@dataclass(frozen=True)
class FormMatrix:
    dim: int
    w: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = self.dim
        if len(self.w) != n or any(len(row) != n for row in self.w):
            raise InputError(f"form matrix must be {n}x{n}")

    def pair(self, u: Vector, v: Vector) -> Scalar:
        return sum(
            (ui * self.w[i][j] * vj for i, ui in enumerate(u) if ui
             for j, vj in enumerate(v) if vj),
            Fraction(0),
        )


def sum_table(lhd: StructureConstants, rhd: StructureConstants) -> StructureConstants:
    """The table of a o b = a<b + a>b, with no validity requirement."""
    return lhd.add(rhd)


def check_novikov(op: StructureConstants, basis=None) -> Report:
    """Evaluate both Novikov identities on every basis triple."""
    t0 = time.perf_counter()
    n = op.dim
    rb = ReportBuilder("novikov", labels.NOVIKOV, basis or default_labels(n))
    e = [basis_vec(n, i) for i in range(n)]
    prod = [[apply_op(op, e[i], e[j]) for j in range(n)] for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = vec_sub(apply_op(op, prod[i][j], e[k]), apply_op(op, e[i], prod[j][k]))
        rhs = vec_sub(apply_op(op, prod[j][i], e[k]), apply_op(op, e[j], prod[i][k]))
        rb.residual("2.1", (i, j, k), vec_sub(lhs, rhs))
        rb.residual("2.2", (i, j, k), vec_sub(apply_op(op, prod[i][j], e[k]),
                                              apply_op(op, prod[i][k], e[j])))
    return rb.build(time.perf_counter() - t0)


def check_pre_novikov(lhd: StructureConstants, rhd: StructureConstants, basis=None) -> Report:
    """Evaluate the four pre-Novikov identities (with o = < + >) on every triple."""
    if lhd.dim != rhd.dim:
        raise InputError("dimension mismatch between < and > tables")
    t0 = time.perf_counter()
    n = lhd.dim
    rb = ReportBuilder("pre_novikov", labels.PRE_NOVIKOV, basis or default_labels(n))
    e = [basis_vec(n, i) for i in range(n)]
    circ = sum_table(lhd, rhd)
    L = [[apply_op(lhd, e[i], e[j]) for j in range(n)] for i in range(n)]
    R = [[apply_op(rhd, e[i], e[j]) for j in range(n)] for i in range(n)]
    O = [[vec_add(L[i][j], R[i][j]) for j in range(n)] for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        # a>(b>c) = (a o b)>c + b>(a>c) - (b o a)>c
        res = vec_sub(
            apply_op(rhd, e[i], R[j][k]),
            vec_sub(
                vec_add(apply_op(rhd, O[i][j], e[k]), apply_op(rhd, e[j], R[i][k])),
                apply_op(rhd, O[j][i], e[k]),
            ),
        )
        rb.residual("2.8", (i, j, k), res)
        # a>(b<c) = (a>b)<c + b<(a o c) - (b<a)<c
        res = vec_sub(
            apply_op(rhd, e[i], L[j][k]),
            vec_sub(
                vec_add(apply_op(lhd, R[i][j], e[k]), apply_op(lhd, e[j], O[i][k])),
                apply_op(lhd, L[j][i], e[k]),
            ),
        )
        rb.residual("2.9", (i, j, k), res)
        # (a o b)>c = (a>c)<b
        rb.residual("2.10", (i, j, k),
                    vec_sub(apply_op(rhd, O[i][j], e[k]), apply_op(lhd, R[i][k], e[j])))
        # (a<b)<c = (a<c)<b
        rb.residual("2.11", (i, j, k),
                    vec_sub(apply_op(lhd, L[i][j], e[k]), apply_op(lhd, L[i][k], e[j])))
    return rb.build(time.perf_counter() - t0)


def associated_novikov(alg: PreNovikovAlgebra) -> NovikovAlgebra:
    """The Novikov algebra with product a o b = a<b + a>b; refuses invalid input."""
    report = check_pre_novikov(alg.lhd, alg.rhd)
    if not report.passed:
        raise RefusalError("input is not a pre-Novikov algebra", report)
    out = NovikovAlgebra(sum_table(alg.lhd, alg.rhd))
    if not check_novikov(out.op).passed:
        raise InternalCheckError("sum of a valid pre-Novikov pair failed the Novikov check")
    return out


def derived_ops(alg: PreNovikovAlgebra) -> tuple[StructureConstants, StructureConstants]:
    """The derived products a(.)b = a>b + b<a and a(*)b = a o b + b o a."""
    circ = sum_table(alg.lhd, alg.rhd)
    odot = alg.rhd.add(alg.lhd.flip_args())
    star = circ.add(circ.flip_args())
    return odot, star


def check_quasi_frobenius(op: StructureConstants, w: FormMatrix, basis=None) -> Report:
    """Skewsymmetry, exact nondegeneracy, and the 2-cocycle-type identity."""
    if op.dim != w.dim:
        raise InputError("form/algebra dimension mismatch")
    t0 = time.perf_counter()
    n = op.dim
    rb = ReportBuilder(
        "quasi_frobenius",
        (labels.QF_SKEW, labels.QF_NONDEGENERATE, labels.QF_COCYCLE),
        basis or default_labels(n),
    )
    for i in range(n):
        for j in range(i, n):
            if w.w[i][j] != -w.w[j][i]:
                rb.residual(labels.QF_SKEW, (i, j), (w.w[i][j] + w.w[j][i],))
    if exact_det(w.w) == 0:
        rb.flag(labels.QF_NONDEGENERATE, "determinant is zero")
    e = [basis_vec(n, i) for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        ab = apply_op(op, e[i], e[j])
        ac_ca = vec_add(apply_op(op, e[i], e[k]), apply_op(op, e[k], e[i]))
        cb = apply_op(op, e[k], e[j])
        val = w.pair(ab, e[k]) - w.pair(ac_ca, e[j]) + w.pair(cb, e[i])
        rb.residual(labels.QF_COCYCLE, (i, j, k), (val,))
    return rb.build(time.perf_counter() - t0)


def form_iso(w: FormMatrix) -> Matrix:
    """The matrix of T: dual -> space with w(T(f), a) = <f, a>.

    In coordinates (T f)^T W a = f^T a for all a, so T = (W^T)^{-1}.
    """
    if exact_det(w.w) == 0:
        raise InputError("form is degenerate")
    return mat_inverse(mat_transpose(w.w))


def pre_novikov_from_qf(op: StructureConstants, w: FormMatrix) -> PreNovikovAlgebra:
    """The compatible pre-Novikov structure of a quasi-Frobenius Novikov algebra.

    Solves w(a>b, c) = w(a o c + c o a, b) and w(a<b, c) = w(a, c o b) for the
    two products, then cross-checks against the dual-transport construction
    a>b = T((Lo* + Ro*)(a) T^{-1} b), a<b = T((-Ro*)(b) T^{-1} a); the two
    routes disagreeing is a bug, not an input condition.
    """
    report = check_quasi_frobenius(op, w)
    if not report.passed:
        raise RefusalError("form is not quasi-Frobenius for this product", report)
    n = op.dim
    T = form_iso(w)
    Tinv = mat_transpose(w.w)
    e = [basis_vec(n, i) for i in range(n)]

    def solve_against_form(rhs_vals: Vector) -> Vector:
        # z with w(z, e_k) = rhs_vals[k] for all k, i.e. W^T z = rhs.
        return mat_vec(T, rhs_vals)

    rhd_rows, lhd_rows = [], []
    for i in range(n):
        rhd_plane, lhd_plane = [], []
        for j in range(n):
            d_rhd = tuple(
                w.pair(vec_add(apply_op(op, e[i], e[k]), apply_op(op, e[k], e[i])), e[j])
                for k in range(n)
            )
            d_lhd = tuple(w.pair(e[i], apply_op(op, e[k], e[j])) for k in range(n))
            rhd_plane.append(solve_against_form(d_rhd))
            lhd_plane.append(solve_against_form(d_lhd))
        rhd_rows.append(tuple(rhd_plane))
        lhd_rows.append(tuple(lhd_plane))
    rhd = StructureConstants(n, tuple(rhd_rows))
    lhd = StructureConstants(n, tuple(lhd_rows))

    # Independent dual-transport route.
    Lo = [mult_matrix(op, e[i], "left") for i in range(n)]
    Ro = [mult_matrix(op, e[i], "right") for i in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        lsum = mat_neg(mat_transpose(tuple(
            tuple(Lo[i][a][b] + Ro[i][a][b] for b in range(n)) for a in range(n))))
        rhd_ij = mat_vec(T, mat_vec(lsum, mat_vec(Tinv, e[j])))
        lhd_ij = mat_vec(T, mat_vec(mat_transpose(Ro[j]), mat_vec(Tinv, e[i])))
        if rhd_ij != rhd.c[i][j] or lhd_ij != lhd.c[i][j]:
            raise InternalCheckError("direct and dual-transport constructions disagree")

    if sum_table(lhd, rhd).c != op.c:
        raise InternalCheckError("recovered products do not sum to the input product")
    out = PreNovikovAlgebra(lhd, rhd)
    sub = check_pre_novikov(lhd, rhd)
    if not sub.passed:
        raise InternalCheckError("quasi-Frobenius data produced an invalid pre-Novikov pair")
    return out


# ---------------------------------------------------------------------------
# exhaustive enumeration of small pre-Novikov algebras
# ---------------------------------------------------------------------------

def _int_tables(values) -> np.ndarray:
    vals = [frac_int(v) for v in values]
    grids = np.array(list(itertools.product(vals, repeat=8)), dtype=np.int64)
    return grids.reshape(-1, 2, 2, 2)


def frac_int(v) -> int:
    f = Fraction(v)
    if f.denominator != 1:
        raise InputError("enumeration values must be integers")
    return int(f)


def enumerate_dim2_pre_novikov(values=(-1, 0, 1), chunk: int = 200_000):
    """All dimension-2 pre-Novikov table pairs with entries in ``values``.

    The full pair space has ``len(values)**16`` members, so enumeration is
    staged: the pure-< identity (a<b)<c = (a<c)<b filters the < tables first,
    then the remaining identities run vectorized over the surviving (<, >)
    pairs in integer arithmetic.  Every survivor is re-verified through the
    exact checker before being returned; a disagreement between the fast path
    and the checker raises.
    """
    tables = _int_tables(values)  # (m, 2, 2, 2)

    # Stage 1: (a<b)<c = (a<c)<b, pure in <.
    lhs = np.einsum("nijm,nmkt->nijkt", tables, tables)
    res = lhs - lhs.transpose(0, 1, 3, 2, 4)
    lhd_ok = tables[np.all(res.reshape(len(tables), -1) == 0, axis=1)]

    # Stage 2: remaining identities over all (lhd, rhd) pairs, chunked, with
    # the cheapest identity filtering candidates before the costlier ones.
    m = len(tables)
    survivors = []
    per_block = max(1, chunk // m)
    for lstart in range(0, len(lhd_ok), per_block):
        lblock = lhd_ok[lstart : lstart + per_block]
        L = np.repeat(lblock, m, axis=0)  # (len(lblock)*m, 2,2,2)
        R = np.tile(tables, (len(lblock), 1, 1, 1))
        O = L + R
        keep = np.arange(len(L))
        # (a o b)>c - (a>c)<b
        r3 = np.einsum("nijm,nmkt->nijkt", O, R) - np.einsum("nikm,nmjt->nijkt", R, L)
        keep = keep[np.all(r3.reshape(len(keep), -1) == 0, axis=1)]
        if not len(keep):
            continue
        L, R, O = L[keep], R[keep], O[keep]
        # a>(b>c) - (a o b)>c - b>(a>c) + (b o a)>c
        r1 = (
            np.einsum("njkm,nimt->nijkt", R, R)
            - np.einsum("nijm,nmkt->nijkt", O, R)
            - np.einsum("nikm,njmt->nijkt", R, R)
            + np.einsum("njim,nmkt->nijkt", O, R)
        )
        ok = np.all(r1.reshape(len(keep), -1) == 0, axis=1)
        # a>(b<c) - (a>b)<c - b<(a o c) + (b<a)<c
        r2 = (
            np.einsum("njkm,nimt->nijkt", L, R)
            - np.einsum("nijm,nmkt->nijkt", R, L)
            - np.einsum("nikm,njmt->nijkt", O, L)
            + np.einsum("njim,nmkt->nijkt", L, L)
        )
        ok &= np.all(r2.reshape(len(keep), -1) == 0, axis=1)
        for idx in keep[np.nonzero(ok)[0]]:
            survivors.append((lblock[idx // m], tables[idx % m]))

    out = []
    for lt, rt in survivors:
        alg = PreNovikovAlgebra(
            StructureConstants.from_rows([[list(map(int, row)) for row in plane] for plane in lt]),
            StructureConstants.from_rows([[list(map(int, row)) for row in plane] for plane in rt]),
        )
        if not check_pre_novikov(alg.lhd, alg.rhd).passed:
            raise InternalCheckError("fast enumeration accepted a pair the checker rejects")
        out.append(alg)
    return out
