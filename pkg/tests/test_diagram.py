import pytest
from hypothesis import given, strategies as st

from brauerann import permutations as perm
from brauerann.diagram import (
    BrauerDiagram,
    DiagramError,
    bar,
    concat,
    crossings,
    diagram_basis,
    double_factorial_odd,
    enumerate_diagrams,
    from_normal_form,
    generator_e,
    generator_s,
    identity_diagram,
    in_coset_set,
    length,
    normal_form,
    parse_diagram,
    permutation_diagram,
    sign,
)

from conftest import diagrams

perms = st.integers(1, 5).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


# --- permutations -------------------------------------------------------------

def test_compose_applies_left_factor_first():
    assert perm.compose((2, 1, 3), (1, 3, 2)) == (3, 1, 2)


@given(perms)
def test_inverse_and_identity(w):
    n = len(w)
    assert perm.compose(w, perm.inverse(w)) == perm.identity(n)
    assert perm.compose(perm.identity(n), w) == w


@given(perms)
def test_reduced_word_rebuilds_permutation(w):
    word = perm.reduced_word(w)
    assert len(word) == perm.length(w)
    out = perm.identity(len(w))
    for i in word:
        out = perm.compose(out, perm.simple(i, len(w)))
    assert out == w


@given(perms, st.data())
def test_sign_is_multiplicative_on_permutations(u, data):
    w = tuple(data.draw(st.permutations(list(range(1, len(u) + 1)))))
    assert perm.sign(perm.compose(u, w)) == perm.sign(u) * perm.sign(w)


def test_longest_element_length():
    assert perm.length((3, 2, 1)) == 3
    assert len(list(perm.all_permutations(4))) == 24


# --- diagrams -----------------------------------------------------------------

def test_bar_convention():
    assert bar(1, 2) == 4 and bar(2, 2) == 3 and bar(1, 3) == 6


def test_generator_transcriptions():
    assert generator_s(1, 2).edges == ((1, 3), (2, 4))
    assert generator_e(1, 2).edges == ((1, 2), (3, 4))
    assert generator_e(2, 3).edges == ((1, 6), (2, 3), (4, 5))


def test_rejects_non_matchings():
    with pytest.raises(DiagramError):
        BrauerDiagram(2, ((1, 2), (1, 3)))
    with pytest.raises(DiagramError):
        generator_e(3, 3)


def test_canonical_form_is_structural():
    assert BrauerDiagram(2, ((4, 2), (3, 1))) == BrauerDiagram(2, ((1, 3), (2, 4)))


def test_text_round_trip():
    D = generator_e(2, 4)
    assert parse_diagram(D.to_text()) == D
    assert parse_diagram("n=2; edges=(1,3)(2,4)") == generator_s(1, 2)


def test_concat_examples():
    e1, s1 = generator_e(1, 2), generator_s(1, 2)
    assert concat(e1, e1) == (e1, 1)
    assert concat(s1, s1) == (identity_diagram(2), 0)
    e = generator_e(1, 3)
    D, k = concat(e, generator_e(2, 3))
    assert k == 0
    assert concat(D, e) == (e, 0)


def test_concat_rejects_mismatched_sizes():
    with pytest.raises(DiagramError):
        concat(identity_diagram(2), identity_diagram(3))


@given(perms, st.data())
def test_permutation_diagrams_multiply_like_permutations(u, data):
    w = tuple(data.draw(st.permutations(list(range(1, len(u) + 1)))))
    D, loops = concat(permutation_diagram(u), permutation_diagram(w))
    assert loops == 0
    assert D == permutation_diagram(perm.compose(u, w))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(diagrams(n), diagrams(n), diagrams(n))))
def test_concat_associative_with_loops(triple):
    a, b, c = triple
    ab, k1 = concat(a, b)
    left, k2 = concat(ab, c)
    bc, k3 = concat(b, c)
    right, k4 = concat(a, bc)
    assert left == right
    assert k1 + k2 == k3 + k4


@given(diagrams())
def test_identity_is_a_unit(D):
    assert concat(identity_diagram(D.n), D) == (D, 0)
    assert concat(D, identity_diagram(D.n)) == (D, 0)


def test_normal_form_examples():
    nf = normal_form(identity_diagram(3))
    assert (nf.d1, nf.f, nf.sigma, nf.d2) == ((1, 2, 3), 0, (1, 2, 3), (1, 2, 3))
    nf = normal_form(generator_e(1, 2))
    assert (nf.d1, nf.f, nf.sigma, nf.d2) == ((1, 2), 1, (1, 2), (1, 2))
    nf = normal_form(generator_e(2, 3))
    assert (nf.d1, nf.f, nf.sigma, nf.d2) == ((2, 3, 1), 1, (1, 2, 3), (2, 3, 1))
    assert perm.length(nf.d1) == perm.length(nf.d2) == 2


@given(diagrams(max_n=5))
def test_normal_form_round_trip(D):
    nf = normal_form(D)
    assert from_normal_form(nf) == D
    assert in_coset_set(nf.d1, nf.f) and in_coset_set(nf.d2, nf.f)
    assert all(nf.sigma[k] == k + 1 for k in range(2 * nf.f))


def test_sign_examples():
    assert sign(identity_diagram(4)) == 1
    for n in range(2, 6):
        for i in range(1, n):
            assert sign(generator_s(i, n)) == -1
            assert sign(generator_e(i, n)) == -1
            assert length(generator_e(i, n)) == 4 * (i - 1)


@given(diagrams(max_n=5))
def test_sign_agrees_with_crossing_parity(D):
    assert sign(D) == (-1) ** (D.f + crossings(D))


@given(perms)
def test_sign_on_permutation_diagrams_is_permutation_sign(w):
    assert sign(permutation_diagram(w)) == perm.sign(w)


def test_sign_not_multiplicative_witness():
    e1 = generator_e(1, 3)
    D, loops = concat(e1, e1)
    assert (D, loops) == (e1, 1)
    assert sign(D) == -1 and sign(e1) * sign(e1) == 1


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945)])
def test_enumeration_sizes(n, count):
    ds = enumerate_diagrams(n)
    assert len(ds) == count == double_factorial_odd(n)
    assert len(set(ds)) == count
    assert ds == sorted(ds, key=lambda d: d.edges)


def test_enumeration_guard():
    with pytest.raises(DiagramError):
        enumerate_diagrams(7)


def test_basis_index_is_consistent():
    B = diagram_basis(4)
    assert all(B.index[D] == i for i, D in enumerate(B.diagrams))
