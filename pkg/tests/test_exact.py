from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from brauerann.linalg import ExactMatrix, SpanBasis, nullspace, rref, span_insert
from brauerann.rings import (
    GF,
    QQ,
    ZZ,
    ZZx,
    IntPoly,
    Mod,
    RingMismatchError,
    field_for,
    is_prime,
    parse_intpoly,
    ring_from_tag,
)

small = st.integers(-20, 20)
primes = st.sampled_from([3, 5, 7, 11, 13])


def test_rational_normalised():
    x = QQ(Fraction(6, -4))
    assert x.denominator == 2 and x.numerator == -3


def test_prime_field_reduces_and_inverts():
    F = GF(7)
    assert F(10) == F(3)
    assert F(3).inverse() == F(5)
    assert F(3) / F(2) == F(5)
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        GF(4)
    assert not is_prime(1) and is_prime(2) and is_prime(97)


def test_mismatched_moduli_refused():
    with pytest.raises(RingMismatchError):
        GF(5)(1) + GF(7)(1)


def test_polynomial_mixed_with_mod_refused():
    with pytest.raises(TypeError):
        ZZx.x + GF(3)(1)


def test_integer_ring_rejects_fractions():
    with pytest.raises(RingMismatchError):
        ZZ(Fraction(1, 2))


def test_intpoly_trims_trailing_zeros():
    assert IntPoly((1, 2, 0, 0)) == IntPoly((1, 2))
    assert IntPoly((0, 0)) == IntPoly()
    assert IntPoly().degree < 0 or IntPoly().degree == -1


def test_intpoly_text_round_trip():
    x = ZZx.x
    p = x * x - 3 * x + 1
    assert str(p) == "x^2-3x+1"
    assert parse_intpoly(str(p)) == p
    assert p(2) == -1


@given(st.lists(small, max_size=5), st.lists(small, max_size=5), small)
def test_intpoly_evaluation_is_a_homomorphism(a, b, v):
    p, q = IntPoly(tuple(a)), IntPoly(tuple(b))
    assert (p * q)(v) == p(v) * q(v)
    assert (p + q)(v) == p(v) + q(v)


@given(primes, small, small, small)
def test_mod_field_axioms(p, a, b, c):
    F = GF(p)
    x, y, z = F(a), F(b), F(c)
    assert x * (y + z) == x * y + x * z
    if y:
        assert (x / y) * y == x


def test_ring_tags_round_trip():
    for R in (ZZ, QQ, ZZx, GF(5)):
        assert ring_from_tag(R.tag) == R
    assert field_for(None) == QQ and field_for(0) == QQ and field_for(3) == GF(3)


# --- linear algebra ---------------------------------------------------------

def test_rref_identity_rank():
    r, _ = rref(ExactMatrix.identity(QQ, 2))
    assert r == 2


def test_rref_zero_matrix_rank():
    r, _ = rref(ExactMatrix.zeros(GF(5), 3, 4))
    assert r == 0


def test_rref_proportional_rows():
    r, _ = rref(ExactMatrix.from_rows(QQ, [[1, 2], [2, 4]]))
    assert r == 1


def test_nullspace_of_identity():
    assert nullspace(ExactMatrix.identity(QQ, 2)).rank == 0


def test_nullspace_over_gf3():
    N = nullspace(ExactMatrix.from_rows(GF(3), [[1, 1], [1, 1]]))
    assert N.rank == 1
    assert N.rows() == [(Mod(1, 3), Mod(2, 3))]


def test_nullspace_three_rows():
    assert nullspace(ExactMatrix.from_rows(QQ, [[1, 0], [0, 1], [1, 1]])).rank == 1


def test_span_insert_examples():
    B = SpanBasis(2, QQ)
    assert span_insert(B, [1, 0])
    assert not span_insert(B, [2, 0])


def test_permutation_coordinates_fill_the_space():
    B = SpanBasis(6, QQ)
    hits = sum(span_insert(B, [int(i == j) for j in range(6)]) for i in range(6))
    assert hits == 6


def test_matrix_text_round_trip():
    M = ExactMatrix.from_rows(QQ, [[Fraction(1, 2), 2], [0, -3]])
    assert ExactMatrix.from_text(QQ, M.to_text()) == M


matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@given(matrices, st.sampled_from([QQ, GF(3), GF(7)]))
def test_rank_nullity(rows, F):
    M = ExactMatrix.from_rows(F, rows)
    r, _ = rref(M)
    N = nullspace(M)
    assert r + N.rank == len(rows)
    for v in N.rows():
        prod = ExactMatrix.from_rows(F, [list(v)]) @ M
        assert prod.is_zero()


@given(matrices)
def test_span_is_order_independent(rows):
    a = SpanBasis.from_rows(QQ, rows)
    b = SpanBasis.from_rows(QQ, list(reversed(rows)))
    assert a == b
    assert a.digest() == b.digest()


@given(matrices, st.sampled_from([QQ, GF(5)]))
def test_complement_is_orthogonal(rows, F):
    S = SpanBasis.from_rows(F, rows)
    C = S.complement()
    assert S.rank + C.rank == S.dim
    A = np.array([[F(x) for x in r] for r in S.rows()] or [[F.zero] * S.dim], dtype=object)
    for v in C.rows():
        assert all(sum((a * b for a, b in zip(r, v)), F.zero) == F.zero for r in A)


def test_gf_rank_can_drop():
    rows = [[1, 1], [1, 4]]
    assert rref(ExactMatrix.from_rows(QQ, rows))[0] == 2
    assert rref(ExactMatrix.from_rows(GF(3), rows))[0] == 1
