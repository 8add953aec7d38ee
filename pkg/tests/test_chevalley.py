import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from typeb_contraction.chevalley import build_algebra, combine, commutator, root_matrix, trace_of_product
from typeb_contraction.rootspace import all_roots, coroot, eps, neg

ALG = {n: build_algebra(n) for n in (2, 3, 4)}


def is_skew_for_form(m):
    """X lies in so(2n+1) for <v_a, v_b> = delta_{a,-b} iff X[a,b] = -X[-b,-a]."""
    keys = set(m) | {(-b, -a) for a, b in m}
    return all(m.get((a, b), 0) == -m.get((-b, -a), 0) for a, b in keys)


def elements(g):
    idx = list(range(g.dim))
    return st.dictionaries(st.sampled_from(idx), st.integers(-3, 3).filter(bool), max_size=4)


def test_root_vectors_preserve_the_form():
    for n in (2, 3, 5):
        for r in all_roots(n):
            assert is_skew_for_form(root_matrix(r))


def test_bracket_table_matches_matrix_commutators():
    for n in (2, 3):
        g = ALG[n]
        for i in range(g.dim):
            for j in range(g.dim):
                m = commutator(g.basis_matrix(i), g.basis_matrix(j))
                assert g.bracket_basis(i, j) == g.decompose(m)


def test_half_integral_constants_only_on_short_coroots():
    g = ALG[3]
    e1 = eps(3, 1)
    assert g.bracket({g.x(e1): 1}, {g.x(neg(e1)): 1}) == g.cartan_coordinates([Fraction(1, 2) * c for c in coroot(e1)])
    long = eps(3, 1, -2)
    assert g.bracket({g.x(long): 1}, {g.x(neg(long)): 1}) == {g.h(1): 1}
    denominators = {Fraction(c).denominator for val in g.table.values() for c in val.values()}
    assert denominators == {1, 2}


@settings(max_examples=150)
@given(st.data())
def test_lie_algebra_axioms(data):
    g = ALG[data.draw(st.sampled_from([2, 3, 4]))]
    a, b, c = (data.draw(elements(g)) for _ in range(3))
    assert g.bracket(a, b) == combine((-1, g.bracket(b, a)))
    jac = combine((1, g.bracket(a, g.bracket(b, c))), (1, g.bracket(b, g.bracket(c, a))), (1, g.bracket(c, g.bracket(a, b))))
    assert jac == {}
    # invariance of the trace form
    assert g.trace_pairing(g.bracket(a, b), c) == g.trace_pairing(a, g.bracket(b, c))


@settings(max_examples=100)
@given(st.data())
def test_trace_pairing_matches_matrix_trace(data):
    g = ALG[data.draw(st.sampled_from([2, 3, 4]))]
    a, b = data.draw(elements(g)), data.draw(elements(g))
    assert g.trace_pairing(a, b) == trace_of_product(g.matrix_of(a), g.matrix_of(b))


def test_n12_builds_with_expected_dimension():
    g = build_algebra(12)
    assert g.dim == 12 * 25
    rng = random.Random(1)
    for _ in range(200):
        i, j = rng.randrange(g.dim), rng.randrange(g.dim)
        assert g.bracket_basis(i, j) == combine((-1, g.bracket_basis(j, i)))
