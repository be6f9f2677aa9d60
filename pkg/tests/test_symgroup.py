from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brauerann import permutations as perm
from brauerann.linalg import SpanBasis
from brauerann.rings import GF, QQ, ZZ
from brauerann.symgroup import (
    GroupAlgebraElement,
    GuardError,
    StandardTableau,
    catalan_identity_check,
    catalan_identity_values,
    conjugate,
    d_of_t,
    dominates,
    final_tableau,
    group_multiply,
    hook_dim,
    initial_tableau,
    kernel_index_count,
    murphy_basis,
    murphy_x,
    murphy_y,
    parse_partition,
    partitions,
    std_tableaux,
    symmetric_group,
    tableau_dominates,
    tau,
    two_row_dim,
    w_lambda,
    x_lambda,
    y_lambda,
    z_lambda,
)

# Frozen from direct enumeration: number of standard tableaux per shape.
STD_COUNTS = {(2, 1): 2, (3, 3): 5, (3, 1): 3, (2, 2): 2, (3, 2): 5, (4, 2): 9,
              (3, 3, 1, 1): 56, (2, 2, 1, 1): 9, (4, 4): 14}


@st.composite
def group_elements(draw, n, ring=QQ, size=6):
    ws = draw(st.lists(st.permutations(list(range(1, n + 1))), max_size=size))
    cs = draw(st.lists(st.integers(-4, 4), min_size=len(ws), max_size=len(ws)))
    terms = {}
    for w, c in zip(ws, cs):
        terms[tuple(w)] = terms.get(tuple(w), 0) + c
    return GroupAlgebraElement(n, ring, terms)


def test_partition_order_and_parse():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert parse_partition("3,1") == (3, 1)
    with pytest.raises(ValueError):
        parse_partition("1,3")


def test_dominance_examples():
    assert all(dominates((5,), mu) for mu in partitions(5))
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))
    assert dominates((2, 2), (2, 1, 1))


@pytest.mark.parametrize("lam, count", sorted(STD_COUNTS.items()))
def test_std_counts(lam, count):
    assert len(std_tableaux(lam)) == count
    assert hook_dim(lam) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_formula_matches_enumeration(n):
    for lam in partitions(n):
        assert hook_dim(lam) == len(std_tableaux(lam))


def test_single_row_has_one_tableau():
    assert len(std_tableaux((6,))) == 1


def test_hook_dim_examples():
    assert hook_dim((3, 3)) == 5
    assert all(hook_dim((m, 1)) == m for m in range(1, 9))


def test_two_row_dim_examples():
    assert two_row_dim(2, 1) == 2 and two_row_dim(3, 2) == 2 and two_row_dim(7, 0) == 1
    for m in range(1, 12):
        for k in range((m + 1) // 2 + 1):
            assert two_row_dim(m, k) == hook_dim((m + 1 - k, k) if k else (m + 1,))


def test_tableau_validation():
    with pytest.raises(KeyError):
        StandardTableau(((1, 3), (2, 4), (5,))).position(9)
    with pytest.raises(ValueError):
        StandardTableau(((2, 1),))
    with pytest.raises(ValueError):
        StandardTableau(((1, 2), (3, 4), (5, 6, 7)))


def test_tableau_accessors():
    t = initial_tableau((3, 1))
    assert t.rows == ((1, 2, 3), (4,))
    assert t.content(4) == -1 and t.content(3) == 2
    assert t.restrict(2) == (2,)
    assert t.conjugate().rows == ((1, 4), (2,), (3,))


def test_std_tableaux_guard():
    with pytest.raises(GuardError):
        std_tableaux((13,))


def test_d_of_t_examples():
    assert d_of_t(initial_tableau((2, 1))) == (1, 2, 3)
    assert d_of_t(final_tableau((2, 1))) == (1, 3, 2)
    assert w_lambda((2, 1)) == (1, 3, 2)
    assert w_lambda((1, 1)) == (1, 2)


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2), (3, 2), (3, 1, 1), (4, 2)])
def test_w_of_conjugate_is_inverse(lam):
    assert w_lambda(conjugate(lam)) == perm.inverse(w_lambda(lam))


@pytest.mark.parametrize("lam", [(3, 1), (2, 2), (3, 2)])
def test_tableau_dominance_extremes(lam):
    tabs = std_tableaux(lam)
    top, bottom = initial_tableau(lam), final_tableau(lam)
    assert all(tableau_dominates(top, t) for t in tabs)
    assert all(tableau_dominates(t, bottom) for t in tabs)


def test_x_y_examples():
    one = GroupAlgebraElement.one(2, ZZ)
    s1 = GroupAlgebraElement.basis((2, 1), ZZ)
    assert x_lambda((1, 1), ZZ) == one
    assert x_lambda((2,), ZZ) == one + s1
    assert y_lambda((2,), ZZ) == one - s1
    assert len(x_lambda((2, 2), ZZ).terms) == 4


def test_murphy_basis_small():
    assert len(murphy_basis(2)) == 2
    for n in (2, 3, 4):
        sb = SpanBasis(len(symmetric_group(n).elements), QQ)
        sb.insert_many([h.change_ring(QQ).to_vector() for *_, h in murphy_basis(n)])
        assert sb.rank == len(symmetric_group(n).elements)


def test_murphy_initial_pair_is_x_lambda():
    for lam in [(2, 1), (3, 1), (2, 2)]:
        t = initial_tableau(lam)
        assert murphy_x(t, t) == x_lambda(lam)
        assert murphy_y(t, t) == y_lambda(lam)


def test_z_examples():
    one = GroupAlgebraElement.one(2, ZZ)
    s1 = GroupAlgebraElement.basis((2, 1), ZZ)
    assert z_lambda((1, 1)) == one - s1
    assert z_lambda((2,)) == one + s1


@pytest.mark.parametrize("n", range(1, 6))
def test_tau_sends_y_to_x(n):
    for lam in partitions(n):
        assert tau(y_lambda(lam)) == x_lambda(lam)


@given(st.integers(1, 5).flatmap(lambda n: group_elements(n)))
def test_tau_is_an_involution(h):
    assert tau(tau(h)) == h
    assert tau(GroupAlgebraElement.one(h.n, QQ)) == GroupAlgebraElement.one(h.n, QQ)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(group_elements(n), group_elements(n))))
def test_tau_is_multiplicative(pair):
    a, b = pair
    assert tau(a * b) == tau(a) * tau(b)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(group_elements(n), group_elements(n), group_elements(n))))
def test_group_algebra_associative(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("ring", [ZZ, QQ, GF(7)])
def test_dense_product_matches_sparse(ring):
    n = 5
    G = symmetric_group(n)
    a = GroupAlgebraElement(n, ring, {w: (i % 5) - 2 for i, w in enumerate(G.elements)})
    b = GroupAlgebraElement(n, ring, {w: (3 * i % 7) - 3 for i, w in enumerate(G.elements)})
    dense = group_multiply(a, b)
    sparse = {}
    for u, c in a.terms.items():
        for w, d in b.terms.items():
            k = perm.compose(u, w)
            sparse[k] = sparse.get(k, ring.zero) + c * d
    assert dense == GroupAlgebraElement(n, ring, sparse)


def test_division_by_scalar():
    h = x_lambda((2,), QQ) / 2
    assert h.terms[(1, 2)] == Fraction(1, 2)


def test_multiplication_table_is_a_group_law():
    G = symmetric_group(4)
    e = G.index[perm.identity(4)]
    assert all(G.table[e, j] == j for j in range(G.order))


def test_catalan_identity_examples():
    assert catalan_identity_values(1).lhs == 2
    assert catalan_identity_values(2).lhs == 5
    assert catalan_identity_values(3).squares == (1, 9, 4)
    assert catalan_identity_values(3).rhs == 14


def test_catalan_identity_range():
    assert all(catalan_identity_check(m) for m in range(1, 51))


def test_kernel_index_count_examples():
    assert kernel_index_count(2, 3) == 5
    assert kernel_index_count(1, 3) == 14
    assert kernel_index_count(2, 4) == 70
    assert kernel_index_count(1, 2) == 2
    assert kernel_index_count(3, 4) == 14
    with pytest.raises(ValueError):
        kernel_index_count(3, 3)
