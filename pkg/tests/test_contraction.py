import pytest
from hypothesis import given, settings, strategies as st

from typeb_contraction.chevalley import combine
from typeb_contraction.contraction import (
    build_contraction,
    centre_of_contraction, coadjoint_matrix, duality_failures, jacobi_failures, jacobi_residual,
)
from typeb_contraction.errors import SupportError
from typeb_contraction.rootspace import eps

from conftest import SMALL_CASES, context, contraction


def test_nilradical_is_abelian():
    A = contraction(5, 2)
    for a in context(5, 2).nilradical:
        for b in context(5, 2).nilradical:
            assert A.bracket({A.g.x(a): 1}, {A.g.x(b): 1}) == {}
    # the ambient bracket is not abelian there
    a, b = eps(5, 1, -3), eps(5, 2, 3)
    assert A.g.bracket({A.g.x(a): 1}, {A.g.x(b): 1})


def test_alpha_s_projection_is_trace_orthogonal_to_levi_cartan():
    for n, s in [(3, 2), (6, 4), (5, 4), (4, 4)]:
        A = contraction(n, s)
        g = A.g
        rest = combine((1, {g.h(s): 1}), (-1, A._h_s_projection))
        assert all(g.trace_pairing(rest, {g.h(i): 1}) == 0 for i in A.ctx.coroot_indices)


def test_frozen_coadjoint_ranks():
    # dim p~' minus index: 13 - 3 and 7 - 3
    assert coadjoint_matrix([eps(3, 2), eps(3, 1, 3)], context(3, 2)).rank() == 10
    assert coadjoint_matrix([eps(2, 2)], context(2, 2)).rank() == 4


def test_support_must_lie_in_delta_pi_prime():
    with pytest.raises(SupportError):
        coadjoint_matrix([eps(3, -2)], context(3, 2))


@pytest.mark.parametrize("n,s", [(2, 2), (3, 2), (4, 2), (4, 4)])
def test_full_jacobi_small(n, s):
    assert jacobi_failures(contraction(n, s)) == 0


@pytest.mark.parametrize("n,s", [(3, 2), (6, 4), (7, 6), (8, 8)])
def test_centre_is_zero(n, s):
    assert centre_of_contraction(context(n, s), contraction(n, s)) == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_CASES), st.integers(0, 2 ** 32))
def test_jacobi_and_duality_sampled(case, seed):
    A = contraction(*case)
    assert jacobi_failures(A, samples=30, seed=seed) == 0
    assert duality_failures(A, samples=20, seed=seed) == 0


def test_derived_part_is_closed():
    A = contraction(6, 4)
    for (a, b), val in A.structure_constants().items():
        assert set(val) <= set(range(A.dim))


class DroppedCartan:
    """so(2n+1) bracket with its Cartan output deleted: not a Lie bracket."""

    def __init__(self, g):
        self.g = g
        self.cartan = {i for i, lab in enumerate(g.labels) if lab[0] == "h"}

    def bracket(self, a, b):
        return {k: v for k, v in self.g.bracket(a, b).items() if k not in self.cartan}


def test_jacobi_residual_detects_a_broken_bracket():
    A = contraction(2, 2)
    assert jacobi_failures(A) == 0
    broken = DroppedCartan(A.g)
    idx = range(A.g.dim)
    assert any(jacobi_residual(broken, {i: 1}, {j: 1}, {k: 1}) for i in idx for j in idx for k in idx)


def test_truncating_the_alpha_s_coordinate_breaks_duality():
    A = build_contraction(context(3, 2))
    assert duality_failures(A, 300) == 0
    A._h_s_projection = {}
    assert duality_failures(A, 300) > 0
