import random
from fractions import Fraction

import pytest

from prenovikov import (
    PreNovikovAlgebra,
    PreNovikovCoalgebra,
    RefusalError,
    adjoint_reps,
    associated_novikov,
    bialgebra_from_r,
    check_bialgebra,
    check_o_operator_novikov,
    check_o_operator_pre_novikov,
    check_pre_novikov,
    co2_equivalence,
    coboundary_diagnostics,
    coboundary_maps,
    dual_novikov_rep,
    form_iso,
    lift_o_operator,
    novikov_adjoint_rep,
    o_operator_novikov,
    pre_novikov_from_o,
    search_symmetric_ybe,
    t_r_from_tensor,
    ybe_residual,
)
from prenovikov.core import (
    InputError,
    StructureConstants,
    basis_vec,
    flip,
    mat_identity,
    mult_matrix,
    t2_apply_left,
    t2_apply_right,
    t2_scale,
    t2_sub,
    t2_zero,
    t3_is_zero,
    mat_add,
)
from prenovikov.yang_baxter import _search_exact, _upper_positions

from conftest import rand_symmetric

F = Fraction


def _single(n, i, j, v=1):
    rows = [[F(0)] * n for _ in range(n)]
    rows[i][j] = F(v)
    return tuple(map(tuple, rows))


def test_ybe_residual_examples(alg2, alg4, sol4):
    assert t3_is_zero(ybe_residual(alg4, sol4))
    assert t3_is_zero(ybe_residual(alg2, t2_zero(2)))
    res = ybe_residual(alg2, _single(2, 0, 0))
    expected = [[[F(0)] * 2 for _ in range(2)] for _ in range(2)]
    expected[0][0][0] = F(1)
    assert res == tuple(tuple(map(tuple, p)) for p in expected)
    with pytest.raises(InputError):
        ybe_residual(alg2, t2_zero(3))


def test_coboundary_maps_values(alg4, sol4):
    co = coboundary_maps(alg4, sol4)
    nz_alpha = [
        (i, j, k, v)
        for i, t in enumerate(co.alpha)
        for j, row in enumerate(t)
        for k, v in enumerate(row)
        if v
    ]
    assert nz_alpha == [(3, 2, 2, F(2))]  # alpha(e2*) = 2 e1* (x) e1*
    assert all(not v for t in co.beta for row in t for v in row)  # beta = 0


def test_coboundary_maps_zero_and_transcription(alg4):
    co = coboundary_maps(alg4, t2_zero(4))
    assert all(not v for t in co.alpha + co.beta for row in t for v in row)
    # beta(a) always equals -(L>(a)(x)id + id(x)(Lo+Ro)(a)) r entrywise
    rng = random.Random(17)
    r = tuple(tuple(F(rng.randint(-2, 2)) for _ in range(4)) for _ in range(4))
    co = coboundary_maps(alg4, r)
    circ = associated_novikov(alg4).op
    for i in range(4):
        a = basis_vec(4, i)
        expect = t2_scale(F(-1), t2_apply_left(mult_matrix(alg4.rhd, a, "left"), r))
        expect = t2_sub(
            expect,
            t2_apply_right(
                mat_add(mult_matrix(circ, a, "left"), mult_matrix(circ, a, "right")), r
            ),
        )
        assert co.beta[i] == expect


def test_claimed_beta_value_is_an_erratum(alg4, sol4):
    """The explicit nonzero beta(e1) sometimes quoted for this construction
    fails the bialgebra compatibility check; the coboundary formulas give
    beta = 0, which passes.  Pinned so the convention cannot silently drift."""
    co = coboundary_maps(alg4, sol4)
    assert check_bialgebra(alg4, co).passed
    claimed = [list(map(list, t)) for t in co.beta]
    claimed[0][1][2] = F(-1)  # beta(e1) = -e2 (x) e1*
    bad = PreNovikovCoalgebra(4, co.alpha, tuple(tuple(map(tuple, t)) for t in claimed))
    report = check_bialgebra(alg4, bad)
    assert not report.passed
    assert {"3.16", "3.18"} <= {v.identity for v in report.all_violations()}


def test_bialgebra_from_r(alg2, alg4, sol4):
    bi = bialgebra_from_r(alg4, sol4)
    assert bi.report is not None and bi.report.passed
    zero = bialgebra_from_r(alg2, t2_zero(2))
    assert zero.report.passed
    with pytest.raises(RefusalError, match="symmetric"):
        bialgebra_from_r(alg2, _single(2, 0, 1))
    with pytest.raises(RefusalError, match="residual"):
        bialgebra_from_r(alg2, _single(2, 0, 0))


def test_diagnostics_symmetric_collapse_and_solutions(alg2, alg4, sol4):
    rng = random.Random(31)
    for _ in range(25):
        d = coboundary_diagnostics(alg2, rand_symmetric(rng, 2))
        assert d.conditions_zero()
    d4 = coboundary_diagnostics(alg4, sol4)
    assert d4.conditions_zero() and d4.equations_zero() and d4.r_tensors_zero()
    dz = coboundary_diagnostics(alg2, t2_zero(2))
    assert dz.conditions_zero() and dz.equations_zero() and dz.r_tensors_zero()


def test_diagnostics_asymmetric_not_collapsed(alg2):
    d = coboundary_diagnostics(alg2, _single(2, 0, 1))
    assert not d.conditions_zero()


def test_diagnostics_nonsolution_symmetric(alg2):
    d = coboundary_diagnostics(alg2, _single(2, 0, 0))
    assert d.conditions_zero()  # symmetric kills the operator conditions
    assert not d.r_tensors_zero()  # but the named tensors see the failure


def test_t_r_from_tensor(alg4, sol4):
    t = t_r_from_tensor(sol4)
    n = 4
    for i in range(n):
        for j in range(n):
            # <e_i* (x) e_j*, r> = <e_i*, T(e_j*)>
            assert sol4[i][j] == t[i][j]
    assert t_r_from_tensor(t2_zero(3)) == t2_zero(3)
    assert t_r_from_tensor(mat_identity(3)) == mat_identity(3)


def test_check_o_operator_novikov(alg2, shift_t):
    nov = associated_novikov(alg2)
    nov_rep, _ = adjoint_reps(alg2)
    zero_t = t2_zero(2)
    assert check_o_operator_novikov(nov, nov_rep, zero_t).passed
    assert check_o_operator_novikov(nov, nov_rep, shift_t).passed
    adj = novikov_adjoint_rep(nov)
    report = check_o_operator_novikov(nov, adj, mat_identity(2))
    assert not report.passed
    first = report.violations[0]
    assert first.witness == ("v1", "v1") and first.residual == ("-1", "0")


def test_check_o_operator_pre_novikov(alg2, shift_t):
    _, pre = adjoint_reps(alg2)
    assert check_o_operator_pre_novikov(alg2, pre, shift_t).passed
    assert check_o_operator_pre_novikov(alg2, pre, t2_zero(2)).passed
    report = check_o_operator_pre_novikov(alg2, pre, mat_identity(2))
    assert not report.passed
    assert "4.30" in {v.identity for v in report.violations}


def test_pre_novikov_from_o(alg2, shift_t):
    nov = associated_novikov(alg2)
    nov_rep, _ = adjoint_reps(alg2)
    oop = o_operator_novikov(nov, nov_rep, shift_t)
    out = pre_novikov_from_o(nov, nov_rep, oop)
    assert check_pre_novikov(out.lhd, out.rhd).passed
    # only nonzero product: e1 < e1 = e2
    nz = [
        (w, i, j, k)
        for w, tbl in (("lhd", out.lhd), ("rhd", out.rhd))
        for i in range(2)
        for j in range(2)
        for k in range(2)
        if tbl.c[i][j][k]
    ]
    assert nz == [("lhd", 0, 0, 1)]
    zero_op = o_operator_novikov(nov, nov_rep, t2_zero(2))
    z = pre_novikov_from_o(nov, nov_rep, zero_op)
    assert z.lhd.is_zero() and z.rhd.is_zero()


def test_pre_novikov_from_o_refusals(alg2, shift_t):
    nov = associated_novikov(alg2)
    nov_rep, _ = adjoint_reps(alg2)
    adj = novikov_adjoint_rep(nov)
    with pytest.raises(RefusalError):
        o_operator_novikov(nov, adj, mat_identity(2))
    oop = o_operator_novikov(nov, nov_rep, shift_t)
    with pytest.raises(InputError):
        pre_novikov_from_o(nov, adj, oop)


def test_form_iso_is_o_operator_for_dual_rep(bialg2=None):
    """The inverse-transpose of a quasi-Frobenius form, seen as a map from the
    dual, intertwines the product with the dual adjoint actions: the route
    used to build the compatible splitting really is operator transport."""
    from prenovikov import double_from_bialgebra
    from prenovikov.core import t2 as mk

    lhd = StructureConstants.from_rows([[[1, 0], [0, 1]], [[0, 1], [0, 0]]])
    alg = PreNovikovAlgebra(lhd, StructureConstants.zero(2))
    alpha = (mk([[0, 0], [0, 1]]), t2_zero(2))
    beta = (mk([[0, 0], [0, -1]]), t2_zero(2))
    from prenovikov import PreNovikovBialgebra

    double = double_from_bialgebra(PreNovikovBialgebra(alg, PreNovikovCoalgebra(2, alpha, beta)))
    T = form_iso(double.form)
    adj = novikov_adjoint_rep(double.algebra)
    dual = dual_novikov_rep(adj)
    assert check_o_operator_novikov(double.algebra, dual, T).passed


def test_co2_equivalence(alg2, alg4, sol4):
    assert co2_equivalence(alg4, sol4) == (True, True, True)
    assert co2_equivalence(alg2, t2_zero(2)) == (True, True, True)
    assert co2_equivalence(alg2, _single(2, 0, 0)) == (False, False, False)
    with pytest.raises(InputError):
        co2_equivalence(alg2, _single(2, 0, 1))


def test_lift_o_operator(alg2, shift_t, alg4, sol4):
    _, pre = adjoint_reps(alg2)
    semi, r = lift_o_operator(alg2, pre, shift_t)
    assert semi == alg4 and r == sol4
    semi0, r0 = lift_o_operator(alg2, pre, t2_zero(2))
    assert all(not v for row in r0 for v in row)
    assert t3_is_zero(ybe_residual(semi0, r0))
    # identity is not an operator; the biconditional must hold on the negative side
    semi_bad, r_bad = lift_o_operator(alg2, pre, mat_identity(2))
    assert not t3_is_zero(ybe_residual(semi_bad, r_bad))
    assert not check_o_operator_pre_novikov(alg2, pre, mat_identity(2)).passed


def test_search_examples(alg2, alg4, sol4):
    assert search_symmetric_ybe(alg2, [F(0)]) == [t2_zero(2)]
    sols = search_symmetric_ybe(alg2, [-1, 0, 1])
    assert t2_zero(2) in sols
    for s in sols:
        neg = tuple(tuple(-v for v in row) for row in s)
        assert neg in sols
    sols01 = search_symmetric_ybe(alg4, [0, 1])
    assert sol4 in sols01


def test_search_ordering_budget_and_fallback(alg2):
    sols = search_symmetric_ybe(alg2, [-1, 0, 1])
    keys = [tuple(s[i][j] for i, j in _upper_positions(2)) for s in sols]
    assert keys == sorted(keys)
    with pytest.raises(InputError, match="candidates"):
        search_symmetric_ybe(alg2, [-1, 0, 1], max_candidates=10)
    exact = _search_exact(alg2, [F(-1), F(0), F(1)], _upper_positions(2))
    assert sorted(exact) == sorted(sols)
    with pytest.raises(InputError):
        search_symmetric_ybe(alg2, [])


def test_search_with_fractional_values(alg2):
    sols = search_symmetric_ybe(alg2, [F(-1, 2), F(0), F(1, 2)])
    exact = _search_exact(alg2, [F(-1, 2), F(0), F(1, 2)], _upper_positions(2))
    assert sorted(sols) == sorted(exact)
    assert t2_zero(2) in sols


def test_search_block_diagonal_dim3(alg2):
    """Search over a 3-dim algebra (fixture plus a null line)."""
    n = 3
    rows = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                rows[i][j][k] = alg2.lhd.c[i][j][k]
    lhd3 = StructureConstants.from_rows(rows)
    alg3 = PreNovikovAlgebra(lhd3, StructureConstants.zero(3))
    assert check_pre_novikov(alg3.lhd, alg3.rhd).passed
    sols = search_symmetric_ybe(alg3, [0, 1])
    exact = _search_exact(alg3, [F(0), F(1)], _upper_positions(3))
    assert sorted(sols) == sorted(exact)


def test_theorem_pipeline_over_search_output(alg2):
    for s in search_symmetric_ybe(alg2, [-1, 0, 1]):
        bi = bialgebra_from_r(alg2, s)
        assert bi.report.passed
        d = coboundary_diagnostics(alg2, s)
        assert d.equations_zero() and d.r_tensors_zero()


def test_search_worker_env(alg2, alg4, sol4, monkeypatch):
    baseline = search_symmetric_ybe(alg4, [-1, 0, 1])
    monkeypatch.setenv("PRENOVIKOV_WORKERS", "3")
    assert search_symmetric_ybe(alg4, [-1, 0, 1]) == baseline
    assert search_symmetric_ybe(alg2, [-1, 0, 1], workers=2) == search_symmetric_ybe(
        alg2, [-1, 0, 1], workers=1
    )
    monkeypatch.setenv("PRENOVIKOV_WORKERS", "zero")
    with pytest.raises(InputError):
        search_symmetric_ybe(alg2, [0])
    monkeypatch.setenv("PRENOVIKOV_WORKERS", "0")
    with pytest.raises(InputError):
        search_symmetric_ybe(alg2, [0])


def test_lift_biconditional_random_maps(alg2):
    rng = random.Random(37)
    _, pre = adjoint_reps(alg2)
    for _ in range(30):
        t = tuple(tuple(F(rng.randint(-2, 2)) for _ in range(2)) for _ in range(2))
        semi, r = lift_o_operator(alg2, pre, t)  # raises if the biconditional breaks
        assert flip(r) == r
