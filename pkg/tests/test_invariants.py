from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from typeb_contraction.errors import NonIntegralError, RegimeError, ZeroWeightError
from typeb_contraction.invariants import (
    FormalCharacterProduct, compute_per_gamma, degree_template, index_and_c, leading_monomial,
    lower_character, solve_s_of_gamma, upper_character,
)
from typeb_contraction.rootspace import dot, eps, fundamental_weight, scale

from conftest import ALL_CASES, PROPER_CASES, certificate, context


def per_gamma(n, s):
    data = certificate(n, s)
    return data, (data.per_gamma or compute_per_gamma(data))


def test_worked_case_degrees():
    data, pg = per_gamma(3, 2)
    w = fundamental_weight(3, 2)
    e = lambda *t: eps(3, *t)
    assert pg[e(1, -3)].q == (2, 1) and pg[e(1, -3)].weight == scale(2, w) and pg[e(1, -3)].degree == 4
    assert pg[e(1, -2)].q == (2, 0) and pg[e(1, -2)].weight == w and pg[e(1, -2)].degree == 3
    assert pg[e(1, 2)].weight == w and pg[e(1, 2)].degree == 1
    assert index_and_c(context(3, 2), [d.degree for d in pg.values()]).c == 8


def test_top_of_levi_block_has_weight_fundamental():
    for n, s in [(5, 4), (8, 6), (12, 10)]:
        _, pg = per_gamma(n, s)
        d = pg[eps(n, s - 1, s)]
        assert d.weight == fundamental_weight(n, s) and d.degree == s // 2


@pytest.mark.parametrize("n,s,degrees", [(2, 2, [3, 1]), (4, 4, [4, 2, 8]), (6, 6, [5, 3, 12, 10])])
def test_n_equal_s_degrees(n, s, degrees):
    data, pg = per_gamma(n, s)
    assert [pg[g].degree for g in data.T] == degrees
    assert sum(degrees) == index_and_c(context(n, s), degrees).c


@given(st.sampled_from(ALL_CASES))
def test_weights_vanish_on_levi_coroots(case):
    n, s = case
    _, pg = per_gamma(n, s)
    ctx = context(n, s)
    for d in pg.values():
        assert all(dot(d.weight, cr) == 0 for cr in ctx.coroot_basis)
        assert all(q >= 0 for q in d.q)


@given(st.sampled_from(ALL_CASES))
def test_fundamental_degree_zero(case):
    n, s = case
    data, pg = per_gamma(n, s)
    counts = index_and_c(context(n, s), [pg[g].degree for g in data.T])
    assert counts.fundamental_degree == 0
    assert counts.c == n * n + n + Fraction(3 * s * s, 4) - n * s - s // 2


@pytest.mark.parametrize("n,s", PROPER_CASES)
def test_character_bounds_agree(n, s):
    _, pg = per_gamma(n, s)
    assert upper_character(pg) == lower_character(context(n, s))


@pytest.mark.parametrize("n,s", PROPER_CASES)
def test_degree_templates(n, s):
    data, pg = per_gamma(n, s)
    for g in data.T:
        assert degree_template(g, context(n, s)) == pg[g].degree


def test_lower_character_needs_n_above_s():
    with pytest.raises(RegimeError):
        lower_character(context(4, 4))
    assert degree_template(eps(4, 1, -2), context(4, 4)) is None


def test_solver_errors():
    ctx = context(3, 2)
    e = lambda *t: eps(3, *t)
    with pytest.raises(NonIntegralError):
        solve_s_of_gamma(e(1, -3), [e(-1, 2), e(-3)], ctx)
    with pytest.raises(ZeroWeightError):
        solve_s_of_gamma(e(1, -2), [e(-1, 2), e(3)], ctx)
    with pytest.raises(ZeroWeightError):
        FormalCharacterProduct.from_counter(Counter({(0, 0, 0): 1}))


def test_leading_monomials_distinct():
    for n, s in [(3, 2), (8, 4), (7, 6), (6, 6)]:
        data, pg = per_gamma(n, s)
        monos = [leading_monomial(g, data.S, pg[g].q) for g in data.T]
        assert all(m[g] == 1 for m, g in zip(monos, data.T))
        assert len({tuple(sorted(m.items())) for m in monos}) == len(monos)
