"""Exact scalars, based vector spaces, and dense multilinear data.

Everything downstream works over the rationals with dense tuples indexed by
basis position.  All values are immutable; every operation is a pure function,
so identities reduce to exact equality tests with no tolerances anywhere.

Conventions used throughout the package:

* a vector is a tuple of ``Fraction``; ``v[i]`` is the coefficient of ``e_i``;
* a matrix ``M`` is a tuple of rows; column ``j`` is the image of ``e_j``,
  i.e. ``(M @ v)[i] = sum_j M[i][j] v[j]``;
* a rank-2 tensor ``t`` has ``t[i][j]`` = coefficient of ``e_i (x) e_j``;
* a rank-3 tensor has ``t[i][j][k]`` = coefficient of ``e_i (x) e_j (x) e_k``;
* structure constants ``c`` of a binary product have
  ``e_i * e_j = sum_k c[i][j][k] e_k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Scalar, ...]
Matrix = tuple[Vector, ...]
Tensor2 = tuple[tuple[Scalar, ...], ...]
Tensor3 = tuple[tuple[tuple[Scalar, ...], ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class InputError(ValueError):
    """Malformed or inconsistent input data (wrong shapes, bad scalars, ...)."""


class RefusalError(RuntimeError):
    """A constructor's verified precondition failed; carries the failing report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InternalCheckError(AssertionError):
    """Two independent routes disagreed; this signals a bug, never bad input."""


def frac(x) -> Scalar:
    """Coerce an int, string ("p/q" or "n"), or Fraction to an exact Scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"not an exact scalar: {x!r}")


def scalar_str(x: Scalar) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# vectors and matrices
# ---------------------------------------------------------------------------

def vec(entries: Iterable) -> Vector:
    return tuple(frac(x) for x in entries)


def vec_zero(n: int) -> Vector:
    return (ZERO,) * n


def basis_vec(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def mat(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vec(row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise InputError("ragged matrix")
    return m


def mat_zero(rows: int, cols: int) -> Matrix:
    return tuple(vec_zero(cols) for _ in range(rows))


def mat_identity(n: int) -> Matrix:
    return tuple(basis_vec(n, i) for i in range(n))


def mat_shape(m: Matrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(x, y) for x, y in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(x, y) for x, y in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(c: Scalar, a: Matrix) -> Matrix:
    return tuple(vec_scale(c, row) for row in a)


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if m and len(m[0]) != len(v):
        raise InputError(f"matrix/vector shape mismatch: {mat_shape(m)} vs {len(v)}")
    return tuple(sum((row[j] * v[j] for j in range(len(v)) if v[j]), ZERO) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    if ca != rb:
        raise InputError(f"matrix shape mismatch: {ca} vs {rb}")
    bt = mat_transpose(b)
    return tuple(
        tuple(sum((a[i][k] * bt[j][k] for k in range(ca) if a[i][k]), ZERO) for j in range(cb))
        for i in range(ra)
    )


def mat_is_zero(a: Matrix) -> bool:
    return all(vec_is_zero(row) for row in a)


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def _integer_lift(m: Matrix) -> tuple[list[list[int]], Scalar]:
    """Clear denominators: returns (integer matrix, scale) with int = scale * m."""
    denom = 1
    for row in m:
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    lifted = [[int(x * denom) for x in row] for row in m]
    return lifted, Fraction(denom)


def exact_det(m: Matrix) -> Scalar:
    """Determinant by fraction-free (Bareiss) elimination on the integer lift."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    a, scale = _integer_lift(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale**n


def solve_linear(a: Matrix, b: Vector) -> Vector:
    """Solve the square system a x = b exactly; raises InputError if singular."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise InputError("solve_linear needs a square system")
    rows = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise InputError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][n] for i in range(n))


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    cols = [solve_linear(a, basis_vec(n, j)) for j in range(n)]
    return mat_transpose(tuple(cols))


# ---------------------------------------------------------------------------
# structure constants of a bilinear product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureConstants:
    """Rank-3 table c with e_i * e_j = sum_k c[i][j][k] e_k."""

    dim: int
    c: Tensor3

    def __post_init__(self):
        n = self.dim
        if n <= 0:
            raise InputError("dimension must be positive")
        if len(self.c) != n or any(
            len(plane) != n or any(len(row) != n for row in plane) for plane in self.c
        ):
            raise InputError(f"structure constants must have shape {n}x{n}x{n}")

    @staticmethod
    def from_rows(rows) -> "StructureConstants":
        c = tuple(tuple(vec(row) for row in plane) for plane in rows)
        return StructureConstants(len(c), c)

    @staticmethod
    def zero(n: int) -> "StructureConstants":
        return StructureConstants(n, tuple(tuple(vec_zero(n) for _ in range(n)) for _ in range(n)))

    def entry(self, i: int, j: int, k: int) -> Scalar:
        return self.c[i][j][k]

    def add(self, other: "StructureConstants") -> "StructureConstants":
        if self.dim != other.dim:
            raise InputError("dimension mismatch")
        return StructureConstants(
            self.dim,
            tuple(
                tuple(vec_add(self.c[i][j], other.c[i][j]) for j in range(self.dim))
                for i in range(self.dim)
            ),
        )

    def flip_args(self) -> "StructureConstants":
        """Table of the opposite product (a, b) -> b * a."""
        n = self.dim
        return StructureConstants(
            n, tuple(tuple(self.c[j][i] for j in range(n)) for i in range(n))
        )

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for plane in self.c for row in plane)


def apply_op(op: StructureConstants, a: Vector, b: Vector) -> Vector:
    """Evaluate the bilinear product on coordinate vectors."""
    n = op.dim
    if len(a) != n or len(b) != n:
        raise InputError(f"apply_op: expected vectors of length {n}")
    out = [ZERO] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        ci = op.c[i]
        for j, bj in enumerate(b):
            if not bj:
                continue
            w = ai * bj
            row = ci[j]
            for k, ck in enumerate(row):
                if ck:
                    out[k] += w * ck
    return tuple(out)


def mult_matrix(op: StructureConstants, a: Vector, side: str) -> Matrix:
    """Matrix of left (b -> a*b) or right (b -> b*a) multiplication by a."""
    n = op.dim
    if len(a) != n:
        raise InputError(f"mult_matrix: expected vector of length {n}")
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    out = [[ZERO] * n for _ in range(n)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n):
            row = op.c[i][j] if side == "left" else op.c[j][i]
            for k, ck in enumerate(row):
                if ck:
                    out[k][j] += ai * ck
    return tuple(tuple(row) for row in out)


# ---------------------------------------------------------------------------
# rank-2 and rank-3 tensors
# ---------------------------------------------------------------------------

def t2(entries: Iterable[Iterable]) -> Tensor2:
    return tuple(vec(row) for row in entries)


def t2_zero(n: int, m: int | None = None) -> Tensor2:
    return tuple(vec_zero(m if m is not None else n) for _ in range(n))


def t2_add(a: Tensor2, b: Tensor2) -> Tensor2:
    return tuple(vec_add(x, y) for x, y in zip(a, b))


def t2_sub(a: Tensor2, b: Tensor2) -> Tensor2:
    return tuple(vec_sub(x, y) for x, y in zip(a, b))


def t2_scale(c: Scalar, a: Tensor2) -> Tensor2:
    return tuple(vec_scale(c, row) for row in a)


def t2_is_zero(a: Tensor2) -> bool:
    return all(vec_is_zero(row) for row in a)


def flip(t: Tensor2) -> Tensor2:
    """The swap a(x)b -> b(x)a; requires a square tensor."""
    n = len(t)
    if any(len(row) != n for row in t):
        raise InputError("flip needs a square rank-2 tensor")
    return tuple(tuple(t[j][i] for j in range(n)) for i in range(n))


def t2_apply_left(m: Matrix, t: Tensor2) -> Tensor2:
    """(M (x) id) t."""
    n = len(t)
    out = [[ZERO] * len(t[0]) for _ in range(len(m))]
    for p in range(n):
        row = t[p]
        for i in range(len(m)):
            mp = m[i][p]
            if not mp:
                continue
            for j, tv in enumerate(row):
                if tv:
                    out[i][j] += mp * tv
    return tuple(tuple(r) for r in out)


def t2_apply_right(m: Matrix, t: Tensor2) -> Tensor2:
    """(id (x) M) t."""
    out = [[ZERO] * len(m) for _ in range(len(t))]
    for i, row in enumerate(t):
        for q, tv in enumerate(row):
            if not tv:
                continue
            for j in range(len(m)):
                mq = m[j][q]
                if mq:
                    out[i][j] += tv * mq
    return tuple(tuple(r) for r in out)


def t2_from_vecs(u: Vector, v: Vector) -> Tensor2:
    return tuple(tuple(a * b for b in v) for a in u)


def t3_zero(n: int) -> Tensor3:
    return tuple(t2_zero(n) for _ in range(n))


def t3_add(a: Tensor3, b: Tensor3) -> Tensor3:
    return tuple(t2_add(x, y) for x, y in zip(a, b))


def t3_sub(a: Tensor3, b: Tensor3) -> Tensor3:
    return tuple(t2_sub(x, y) for x, y in zip(a, b))


def t3_is_zero(a: Tensor3) -> bool:
    return all(t2_is_zero(plane) for plane in a)


def permute3(t: Tensor3, perm: Sequence[int]) -> Tensor3:
    """Push tensor slots around: slot k of the input becomes slot perm[k-1].

    ``perm`` is a permutation of (1, 2, 3).  The group action law holds:
    ``permute3(permute3(t, s), r) == permute3(t, compose_perm(r, s))``.
    """
    if sorted(perm) != [1, 2, 3]:
        raise InputError(f"not a permutation of (1,2,3): {perm!r}")
    n = len(t)
    # out[j1][j2][j3] = t[j_{perm(1)}][j_{perm(2)}][j_{perm(3)}]
    p = tuple(x - 1 for x in perm)
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for j in itertools.product(range(n), repeat=3):
        out[j[0]][j[1]][j[2]] = t[j[p[0]]][j[p[1]]][j[p[2]]]
    return tuple(tuple(tuple(row) for row in plane) for plane in out)


def compose_perm(r: Sequence[int], s: Sequence[int]) -> tuple[int, ...]:
    """(r s)(k) = r(s(k)) on {1,2,3}."""
    return tuple(r[s[k] - 1] for k in range(3))


def t3_apply(m: Matrix, t: Tensor3, slot: int) -> Tensor3:
    """Apply a matrix to one tensor leg (slot in {1,2,3})."""
    n = len(t)
    if slot not in (1, 2, 3):
        raise InputError(f"slot must be 1, 2, or 3, got {slot}")
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, plane in enumerate(t):
        for j, row in enumerate(plane):
            for k, tv in enumerate(row):
                if not tv:
                    continue
                old = (i, j, k)[slot - 1]
                for newidx in range(n):
                    mv = m[newidx][old]
                    if not mv:
                        continue
                    idx = [i, j, k]
                    idx[slot - 1] = newidx
                    out[idx[0]][idx[1]][idx[2]] += mv * tv
    return tuple(tuple(tuple(row) for row in plane) for plane in out)


def t3_from_vec_t2(v: Vector, t: Tensor2) -> Tensor3:
    """v (x) t in slots (1; 2,3)."""
    return tuple(t2_scale(a, t) for a in v)


def t3_from_t2_vec(t: Tensor2, v: Vector) -> Tensor3:
    """t (x) v in slots (1,2; 3)."""
    return tuple(tuple(tuple(tv * a for a in v) for tv in row) for row in t)


_VALID_SLOT_PAIRS = {(p, q) for p in (1, 2, 3) for q in (1, 2, 3) if p != q}


def placed_product(
    r: Tensor2,
    r2: Tensor2,
    op: StructureConstants,
    slots: tuple[tuple[int, int], tuple[int, int]],
) -> Tensor3:
    """Generic placed product r_pq * r'_st in the triple tensor power.

    The first factor's components go to slots (p, q), the second factor's to
    slots (s, t); the one shared slot receives the product of the two
    components mapped there, first argument taken from ``r``.  The slot
    patterns must jointly cover {1, 2, 3} with exactly one overlap.
    """
    (p, q), (s, t) = slots
    if (p, q) not in _VALID_SLOT_PAIRS or (s, t) not in _VALID_SLOT_PAIRS:
        raise InputError(f"invalid slot pattern {slots!r}")
    shared = {p, q} & {s, t}
    if len(shared) != 1 or {p, q} | {s, t} != {1, 2, 3}:
        raise InputError(f"slot pattern must cover 1..3 with one shared slot: {slots!r}")
    n = op.dim
    if len(r) != n or len(r2) != n or any(len(row) != n for row in r + r2):
        raise InputError("placed_product: dimension mismatch")
    shared_slot = shared.pop()
    free_r = q if p == shared_slot else p
    free_r2 = t if s == shared_slot else s

    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            w1 = r[a][b]
            if not w1:
                continue
            prod_r, other_r = (a, b) if p == shared_slot else (b, a)
            for c in range(n):
                for d in range(n):
                    w2 = r2[c][d]
                    if not w2:
                        continue
                    prod_r2, other_r2 = (c, d) if s == shared_slot else (d, c)
                    w = w1 * w2
                    row = op.c[prod_r][prod_r2]
                    for k in range(n):
                        ck = row[k]
                        if not ck:
                            continue
                        idx = [0, 0, 0]
                        idx[shared_slot - 1] = k
                        idx[free_r - 1] = other_r
                        idx[free_r2 - 1] = other_r2
                        out[idx[0]][idx[1]][idx[2]] += w * ck
    return tuple(tuple(tuple(row) for row in plane) for plane in out)


def dual_map(m: Matrix, mode: str) -> Matrix:
    """Dual of a linear map on coordinate duals.

    ``pairing`` mode is the plain transpose, <M*(f), v> = <f, M v>;
    ``rep`` mode is the negated transpose, <M*(f), v> = -<f, M v>.
    """
    if mode == "pairing":
        return mat_transpose(m)
    if mode == "rep":
        return mat_neg(mat_transpose(m))
    raise InputError(f"dual_map mode must be 'pairing' or 'rep', got {mode!r}")
