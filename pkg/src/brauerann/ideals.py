"""Two-sided ideals of B_n(delta) and KS_n as row spaces over a field.

An ideal is grown from its generators by a FIFO worklist: every newly found
direction is multiplied on both sides by each algebra generator (s_i and e_i
for the Brauer algebra, s_i for the symmetric group) and the products are
reduced against the current span.  Multiplication by a generator permutes
basis diagrams up to a power of delta, so each product is one scatter-add on
a batch of coordinate rows.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from typing import Sequence

import numpy as np

from . import permutations as perm
from .algebra import AlgebraElement, E_element, E_i, PairingSpec, perm_elem
from .diagram import BrauerDiagram, bar, concat, diagram_basis, generator_e, generator_s, identity_diagram
from .linalg import SpanBasis
from .rings import PrimeField, QQ, Ring, UnsupportedRingError
from .symgroup import (
    GroupAlgebraElement,
    d_of_t,
    dominates,
    murphy_x,
    partitions,
    std_tableaux,
    symmetric_group,
    x_lambda,
)
from .tensor import CHAR_TWO_MESSAGE, CharacteristicTwoError, _to_field, kernel

log = logging.getLogger(__name__)


class Ambient:
    """Common interface: a basis of size ``dim`` and generator action tables."""

    field: Ring
    dim: int
    generator_names: list[str]

    def tables(self) -> list[tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]:
        """Per generator g: (left target, left scale, right target, right scale)."""
        raise NotImplementedError

    def vector(self, h) -> list:
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError


def _check_characteristic(field: Ring, allow_char2: bool) -> None:
    if isinstance(field, PrimeField) and field.p == 2 and not allow_char2:
        raise CharacteristicTwoError(CHAR_TWO_MESSAGE)
    if not field.is_field:
        raise UnsupportedRingError(f"ideal computations need a field, got {field!r}")


class BrauerAmbient(Ambient):
    """B_n(delta) over ``field`` with the frozen diagram basis."""

    def __init__(self, n: int, delta: int, field: Ring = QQ, allow_char2: bool = False):
        _check_characteristic(field, allow_char2)
        self.n = n
        self.delta = delta
        self.field = field
        self.basis = diagram_basis(n)
        self.dim = len(self.basis)
        self.generator_names = [f"s{i}" for i in range(1, n)] + [f"e{i}" for i in range(1, n)]
        self._gens = [generator_s(i, n) for i in range(1, n)] + [generator_e(i, n) for i in range(1, n)]
        self._tables = None

    def __eq__(self, other):
        return (isinstance(other, BrauerAmbient) and (self.n, self.field) == (other.n, other.field)
                and self.field(self.delta) == other.field(other.delta))

    def __hash__(self):
        return hash(("B", self.n, self.field))

    def tables(self):
        if self._tables is None:
            idx = self.basis.index
            out = []
            for g in self._gens:
                lt, ls, rt, rs = [], [], [], []
                for D in self.basis.diagrams:
                    P, loops = concat(g, D)
                    lt.append(idx[P])
                    ls.append(self.delta ** loops)
                    P, loops = concat(D, g)
                    rt.append(idx[P])
                    rs.append(self.delta ** loops)
                out.append(tuple(np.array(x, dtype=np.int64) for x in (lt, ls, rt, rs)))
            self._tables = out
        return self._tables

    def vector(self, h) -> list:
        if isinstance(h, BrauerDiagram):
            h = AlgebraElement.from_diagram(h, QQ, self.delta)
        if not isinstance(h, AlgebraElement) or h.n != self.n:
            raise ValueError(f"expected an element of B_{self.n}")
        if _to_field(h.delta, self.field, self.delta) != self.field(self.delta):
            raise ValueError(f"element has delta = {h.delta}, ambient has {self.delta}")
        v = [self.field.zero] * self.dim
        for D, c in h.terms.items():
            v[self.basis.index[D]] = _to_field(c, self.field, self.delta)
        return v

    def element(self, row) -> AlgebraElement:
        terms = {self.basis.diagrams[j]: c for j, c in enumerate(row) if c}
        return AlgebraElement(self.n, self.field, self.delta, terms)

    def describe(self) -> dict:
        return {"algebra": "brauer", "n": self.n, "delta": self.delta, "field": self.field.tag}


class SymmetricAmbient(Ambient):
    """KS_n over ``field``, permutations in lexicographic order."""

    def __init__(self, n: int, field: Ring = QQ, allow_char2: bool = False):
        _check_characteristic(field, allow_char2)
        self.n = n
        self.field = field
        self.group = symmetric_group(n)
        self.dim = self.group.order
        self.generator_names = [f"s{i}" for i in range(1, n)]
        self._tables = None

    def __eq__(self, other):
        return isinstance(other, SymmetricAmbient) and (self.n, self.field) == (other.n, other.field)

    def __hash__(self):
        return hash(("S", self.n, self.field))

    def tables(self):
        if self._tables is None:
            G = self.group
            ones = np.ones(self.dim, dtype=np.int64)
            out = []
            for i in range(1, self.n):
                left = np.array([G.index[perm.compose(perm.simple(i, self.n), w)] for w in G.elements])
                right = np.array([G.index[perm.compose(w, perm.simple(i, self.n))] for w in G.elements])
                out.append((left, ones, right, ones))
            self._tables = out
        return self._tables

    def vector(self, h) -> list:
        if not isinstance(h, GroupAlgebraElement) or h.n != self.n:
            raise ValueError(f"expected an element of S_{self.n}")
        v = [self.field.zero] * self.dim
        for w, c in h.terms.items():
            v[self.group.index[w]] = _to_field(c, self.field, 0)
        return v

    def describe(self) -> dict:
        return {"algebra": "symmetric", "n": self.n, "field": self.field.tag}


def _apply(rows: np.ndarray, target: np.ndarray, scale: np.ndarray, field: Ring) -> np.ndarray:
    """Coordinates of ``g * v`` (or ``v * g``) for each row ``v``."""
    out = np.zeros_like(rows)
    if isinstance(field, PrimeField):
        np.add.at(out.T, target, (rows * (scale % field.p)).T)
        return out % field.p
    contrib = rows * scale.astype(object) if (scale != 1).any() else rows
    np.add.at(out.T, target, contrib.T)
    return out


@dataclass
class IdealClosure:
    ambient: Ambient
    generators: list
    span: SpanBasis
    rounds: int = 0
    products: int = 0
    closed: bool | None = None

    @property
    def dim(self) -> int:
        return self.span.rank

    def contains(self, h) -> bool:
        return membership(h, self)

    def stats(self) -> dict:
        return {"rounds": self.rounds, "products": self.products, "dimension": self.dim}


def two_sided_closure(gens: Sequence, ambient: Ambient, verify: bool = True) -> IdealClosure:
    """The two-sided ideal generated by ``gens`` (elements or coordinate rows)."""
    span = SpanBasis(ambient.dim, ambient.field)
    vecs = [g if isinstance(g, (list, tuple, np.ndarray)) else ambient.vector(g) for g in gens]
    result = IdealClosure(ambient, list(gens), span)
    if not vecs:
        result.closed = True
        return result
    frontier = span.absorb(vecs)
    tables = ambient.tables()
    while frontier.shape[0] and span.rank < ambient.dim:
        result.rounds += 1
        batch = []
        for lt, ls, rt, rs in tables:
            batch.append(_apply(frontier, lt, ls, ambient.field))
            batch.append(_apply(frontier, rt, rs, ambient.field))
        result.products += len(tables) * 2 * frontier.shape[0]
        frontier = span.absorb(np.vstack(batch))
        log.debug("round %d: dimension %d", result.rounds, span.rank)
    if verify:
        result.closed = is_closed(span, ambient)
    return result


def is_closed(span: SpanBasis, ambient: Ambient) -> bool:
    """Post hoc: the span is stable under both-sided generator multiplication."""
    if span.rank in (0, ambient.dim):
        return True
    B = span.row_array()
    for lt, ls, rt, rs in ambient.tables():
        if not span.contains_all(_apply(B, lt, ls, ambient.field)):
            return False
        if not span.contains_all(_apply(B, rt, rs, ambient.field)):
            return False
    return True


def _as_span(x) -> SpanBasis:
    return x.span if isinstance(x, IdealClosure) else x


def ideal_equals(A, B) -> bool:
    sa, sb = _as_span(A), _as_span(B)
    if isinstance(A, IdealClosure) and isinstance(B, IdealClosure) and A.ambient != B.ambient:
        raise ValueError("ideals live in different ambient algebras")
    if (sa.field, sa.dim) != (sb.field, sb.dim):
        raise ValueError("ideals live in different ambient algebras")
    return sa.issubspace(sb) and sb.issubspace(sa)


def membership(h, I: IdealClosure) -> bool:
    v = h if isinstance(h, (list, tuple, np.ndarray)) else I.ambient.vector(h)
    return I.span.contains(v)


# --- predicted dimensions ---------------------------------------------------

def two_row(n: int, a: int) -> tuple[int, ...]:
    if not 0 <= 2 * a <= n:
        raise ValueError(f"need 0 <= a <= n/2, got n={n}, a={a}")
    return (n - a, a) if a else (n,)


def dominance_ideal_dim(n: int, a: int, field: Ring | None = None) -> int:
    """Dimension of the cell ideal above ``(n-a, a)``.

    Without ``field`` this is the tableau count; with a field it is the rank
    of the corresponding Murphy elements computed over that field.
    """
    mu = two_row(n, a)
    shapes = [lam for lam in partitions(n) if dominates(lam, mu)]
    if field is None:
        return sum(len(std_tableaux(lam)) ** 2 for lam in shapes)
    sb = SpanBasis(factorial(n), field)
    for lam in shapes:
        tabs = std_tableaux(lam)
        sb.insert_many([SymmetricAmbient(n, field, allow_char2=True).vector(murphy_x(u, v, field))
                        for u in tabs for v in tabs])
    return sb.rank


def murphy_above(n: int, a: int, field: Ring) -> list[GroupAlgebraElement]:
    mu = two_row(n, a)
    out = []
    for lam in partitions(n):
        if dominates(lam, mu):
            tabs = std_tableaux(lam)
            out.extend(murphy_x(u, v, field) for u in tabs for v in tabs)
    return out


def sym_ideal(n: int, a: int, field: Ring = QQ) -> IdealClosure:
    """The ideal of KS_n generated by X_(n-a, a)."""
    amb = SymmetricAmbient(n, field)
    return two_sided_closure([x_lambda(two_row(n, a), field)], amb)


def horizontal_count(n: int, f: int) -> int:
    return sum(1 for D in diagram_basis(n).diagrams if D.f >= f)


def cell_ideal_dim_brauer(n: int, f: int, delta: int, field: Ring = QQ) -> int:
    """Dimension of the ideal generated by e_1 e_3 ... e_{2f-1}."""
    if not 0 <= 2 * f <= n:
        raise ValueError(f"need 0 <= f <= n/2, got n={n}, f={f}")
    D = identity_diagram(n)
    for i in range(1, f + 1):
        D, _ = concat(D, generator_e(2 * i - 1, n))
    amb = BrauerAmbient(n, delta, field)
    return two_sided_closure([AlgebraElement.from_diagram(D, field, delta)], amb).dim


# --- kernel identifications -------------------------------------------------

def kernel_generators(m: int, n: int, field: Ring, which: str = "top") -> list[AlgebraElement]:
    """``[E_top]`` or ``[E_0, ..., E_top]`` with top = [(m+1)/2]."""
    top = (m + 1) // 2
    idx = [top] if which == "top" else list(range(top + 1))
    return [E_i(i, m, n, field, m) for i in idx]


def kernel_ideal(m: int, n: int, field: Ring, which: str = "top") -> IdealClosure:
    amb = BrauerAmbient(n, m, field)
    return two_sided_closure(kernel_generators(m, n, field, which), amb)


def corollary_family(m: int, field: Ring = QQ) -> list[AlgebraElement]:
    """``d(s)^{-1} E_top d(t)`` for s, t standard of shape (m+1-k, k), every k."""
    n = m + 1
    E = E_i((m + 1) // 2, m, n, field, m)
    out = []
    for k in range((m + 1) // 2 + 1):
        tabs = std_tableaux(two_row(n, k))
        for s in tabs:
            left = perm_elem(perm.inverse(d_of_t(s)), field, m)
            for t in tabs:
                out.append(left * E * perm_elem(d_of_t(t), field, m))
    return out


def shapewise_family(m: int, field: Ring = QQ) -> list[AlgebraElement]:
    """``d(s)^{-1} E_{m+1-k,k} d(t)``: the same tableau pairs, each with its own E."""
    n = m + 1
    out = []
    for k in range((m + 1) // 2 + 1):
        E = E_element(m + 1 - k, k, n, field, m)
        tabs = std_tableaux(two_row(n, k))
        for s in tabs:
            left = perm_elem(perm.inverse(d_of_t(s)), field, m)
            for t in tabs:
                out.append(left * E * perm_elem(d_of_t(t), field, m))
    return out


@dataclass
class FamilyReport:
    size: int
    distinct: int
    rank: int
    kernel_dim: int
    in_kernel: bool
    spans_kernel: bool

    @property
    def is_basis(self) -> bool:
        return self.in_kernel and self.rank == self.size == self.kernel_dim and self.spans_kernel

    def as_dict(self) -> dict:
        return {"size": self.size, "distinct": self.distinct, "rank": self.rank,
                "kernel_dim": self.kernel_dim, "in_kernel": self.in_kernel,
                "spans_kernel": self.spans_kernel, "is_basis": self.is_basis}


def family_report(family: list[AlgebraElement], m: int, field: Ring = QQ) -> FamilyReport:
    n = m + 1
    amb = BrauerAmbient(n, m, field)
    K = kernel(m, n, field)
    vecs = [amb.vector(h) for h in family]
    sb = SpanBasis(amb.dim, field)
    if vecs:
        sb.insert_many(vecs)
    distinct = len({tuple(v) for v in vecs})
    return FamilyReport(len(family), distinct, sb.rank, K.rank, sb.issubspace(K), K.issubspace(sb))


def random_pairing_spec(n: int, a11: int, a12: int, rng) -> PairingSpec:
    """A random valid spec with a11 top and a12 bottom labels in S, and the
    complementary counts (a12 top, a11 bottom) in S'."""
    if a11 + a12 == 0 or a11 + a12 > n:
        raise ValueError("need 1 <= a11 + a12 <= n")
    tops = list(range(1, n + 1))
    bots = [bar(i, n) for i in range(1, n + 1)]
    rng.shuffle(tops)
    rng.shuffle(bots)
    A1, A3 = tops[:a11], tops[a11:a11 + a12]
    A2, A4 = bots[:a12], bots[a12:a12 + a11]
    S, Sp = A1 + A2, A3 + A4
    rng.shuffle(S)
    rng.shuffle(Sp)
    rest = tops[a11 + a12:] + bots[a11 + a12:]
    rng.shuffle(rest)
    beta = tuple((rest[2 * k], rest[2 * k + 1]) for k in range(len(rest) // 2))
    return PairingSpec(tuple(S), tuple(Sp), beta)
