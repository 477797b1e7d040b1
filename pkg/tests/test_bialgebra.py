from fractions import Fraction

import pytest

from prenovikov import (
    PreNovikovAlgebra,
    PreNovikovCoalgebra,
    check_bialgebra,
    check_coalgebra,
    check_compatibility,
    check_pre_novikov,
    coalgebra_to_dual_algebra,
)
from prenovikov.core import InputError, StructureConstants, t2_zero



F = Fraction


def test_dual_algebra_values(co2):
    lhd_star, rhd_star = coalgebra_to_dual_algebra(co2)
    # alpha(e1) = e2 (x) e2 induces e2* <* e2* = e1*
    assert lhd_star.c[1][1] == (F(1), F(0))
    # beta(e1) = -e2 (x) e2 induces e2* >* e2* = -e1*
    assert rhd_star.c[1][1] == (F(-1), F(0))
    nonzero_l = [(p, q) for p in range(2) for q in range(2) if any(lhd_star.c[p][q])]
    nonzero_r = [(p, q) for p in range(2) for q in range(2) if any(rhd_star.c[p][q])]
    assert nonzero_l == [(1, 1)] and nonzero_r == [(1, 1)]
    zero_co = PreNovikovCoalgebra(2, (t2_zero(2), t2_zero(2)), (t2_zero(2), t2_zero(2)))
    zl, zr = coalgebra_to_dual_algebra(zero_co)
    assert zl.is_zero() and zr.is_zero()


def test_dual_algebra_of_fixture_is_pre_novikov(co2):
    lhd_star, rhd_star = coalgebra_to_dual_algebra(co2)
    assert check_pre_novikov(lhd_star, rhd_star).passed


def test_check_coalgebra_examples(co2):
    assert check_coalgebra(co2).passed
    zero_co = PreNovikovCoalgebra(2, (t2_zero(2), t2_zero(2)), (t2_zero(2), t2_zero(2)))
    assert check_coalgebra(zero_co).passed


def test_alpha_e1_tensor_e1_is_actually_valid():
    """Pinned: this candidate satisfies every co-identity (its double
    products collapse), so it is a positive case, not a failing one."""
    alpha = (((F(1), F(0)), (F(0), F(0))), t2_zero(2))
    co = PreNovikovCoalgebra(2, alpha, (t2_zero(2), t2_zero(2)))
    assert check_coalgebra(co).passed


def test_failing_coalgebra_and_dual_route_consistency():
    ones = tuple(tuple(F(-1) for _ in range(2)) for _ in range(2))
    co = PreNovikovCoalgebra(2, (ones, t2_zero(2)), (ones, t2_zero(2)))
    report = check_coalgebra(co)
    assert not report.passed
    ids = {v.identity for v in report.violations}
    assert {"3.11", "3.13"} <= ids
    # the nested dual-route section must agree (the checker would raise otherwise)
    assert len(report.sections) == 1 and not report.sections[0].passed


def test_dual_route_agreement_over_mutations(co2):
    """Every single-entry mutation keeps the two coalgebra routes in agreement
    (a disagreement raises inside the checker)."""
    for which in ("alpha", "beta"):
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    maps = getattr(co2, which)
                    mutated = [
                        [list(row) for row in t2] for t2 in maps
                    ]
                    mutated[i][j][k] += 1
                    new = tuple(tuple(map(tuple, t)) for t in mutated)
                    co = PreNovikovCoalgebra(
                        2,
                        new if which == "alpha" else co2.alpha,
                        new if which == "beta" else co2.beta,
                    )
                    check_coalgebra(co)  # must not raise


def test_check_compatibility_examples(alg2, co2):
    assert check_compatibility(alg2, co2).passed
    zero_co = PreNovikovCoalgebra(2, (t2_zero(2), t2_zero(2)), (t2_zero(2), t2_zero(2)))
    assert check_compatibility(alg2, zero_co).passed
    negated_beta = tuple(
        tuple(tuple(-v for v in row) for row in t) for t in co2.beta
    )
    report = check_compatibility(alg2, PreNovikovCoalgebra(2, co2.alpha, negated_beta))
    assert not report.passed
    first = report.violations[0]
    assert first.identity == "3.16" and first.witness == ("e1", "e1")
    with pytest.raises(InputError):
        check_compatibility(alg2, PreNovikovCoalgebra(3, (t2_zero(3),) * 3, (t2_zero(3),) * 3))


def test_check_bialgebra(alg2, co2, alg4):
    assert check_bialgebra(alg2, co2).passed
    zero_alg = PreNovikovAlgebra(StructureConstants.zero(2), StructureConstants.zero(2))
    zero_co = PreNovikovCoalgebra(2, (t2_zero(2), t2_zero(2)), (t2_zero(2), t2_zero(2)))
    assert check_bialgebra(zero_alg, zero_co).passed
    # the four-dimensional fixture bialgebra: alpha(e2*) = 2 e1* (x) e1*, beta = 0
    a4 = [[[F(0)] * 4 for _ in range(4)] for _ in range(4)]
    a4[3][2][2] = F(2)
    co4 = PreNovikovCoalgebra(
        4,
        tuple(tuple(map(tuple, p)) for p in a4),
        tuple(t2_zero(4) for _ in range(4)),
    )
    assert check_bialgebra(alg4, co4).passed
