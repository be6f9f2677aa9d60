"""Partitions, standard tableaux and the group algebra of S_n.

Permutations compose as right actions (see :mod:`brauerann.permutations`), so
``d(t)`` is defined by ``t^lambda d(t) = t``: the entry ``k`` of the initial
tableau is replaced by ``(k)d(t)``.  In one-line notation ``d(t)`` is simply
the row reading word of ``t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _perms, product
from math import factorial
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import permutations as perm
from .permutations import Permutation
from .rings import QQ, ZZ, Mod, PrimeField, RationalField, Ring, RingMismatchError

Partition = tuple[int, ...]

MAX_TABLEAU_SIZE = 12
MAX_TABLE_N = 6


class GuardError(ValueError):
    """A size guard refused the request."""


# --- partitions ------------------------------------------------------------

def is_partition(lam: Sequence[int]) -> bool:
    return all(x > 0 for x in lam) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def parse_partition(text: str) -> Partition:
    lam = tuple(int(x) for x in text.split(",") if x.strip())
    if not is_partition(lam):
        raise ValueError(f"{text!r} is not a partition")
    return lam


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, max(lam) + 1))


def partitions(n: int, largest: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order, ``(n)`` first."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam`` dominates ``mu``: every partial sum of lam is at least mu's."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{tuple(lam)} and {tuple(mu)} have different sizes")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def strictly_dominates(lam, mu) -> bool:
    return tuple(lam) != tuple(mu) and dominates(lam, mu)


def doubled(lam: Sequence[int]) -> Partition:
    """``(l1, l1, l2, l2, ...)``."""
    return tuple(x for part in lam for x in (part, part))


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    lc = conjugate(lam)
    return [[lam[i] + lc[j] - (i + 1) - (j + 1) + 1 for j in range(lam[i])] for i in range(len(lam))]


def hook_dim(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook formula."""
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(sum(lam)) // prod


def two_row_dim(m: int, k: int) -> int:
    """Closed form for the number of standard ``(m+1-k, k)``-tableaux."""
    if not 0 <= 2 * k <= m + 1:
        raise ValueError(f"need 0 <= k <= (m+1)/2, got m={m}, k={k}")
    if k == 0:
        return 1
    num = m - 2 * k + 2
    for j in range(m - k + 3, m + 2):
        num *= j
    return num // factorial(k)


@dataclass(frozen=True)
class IdentityValues:
    m: int
    squares: tuple[int, ...]
    lhs: int
    rhs: int
    closed_form: int
    formula_lhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs == self.closed_form == self.formula_lhs


def catalan_identity_values(m: int) -> IdentityValues:
    if m < 1:
        raise ValueError("m must be positive")
    top = (m + 1) // 2
    dims = [hook_dim((m + 1 - k, k) if k else (m + 1,)) for k in range(top + 1)]
    lhs = sum(d * d for d in dims)
    rhs = hook_dim((m + 1, m + 1))
    closed = 1
    for j in range(m + 3, 2 * m + 3):
        closed *= j
    closed //= factorial(m + 1)
    formula = sum(two_row_dim(m, k) ** 2 for k in range(top + 1))
    return IdentityValues(m, tuple(d * d for d in dims), lhs, rhs, closed, formula)


def catalan_identity_check(m: int) -> bool:
    return catalan_identity_values(m).holds


def kernel_index_count(m: int, n: int) -> int:
    """Size of the index set: partitions nu of n above the hook (m+1, 1^(n-m-1))
    in dominance, each weighted by the number of standard tableaux of its
    row-doubled shape."""
    if not n > m >= 1:
        raise ValueError(f"need n > m >= 1, got m={m}, n={n}")
    hook = (m + 1,) + (1,) * (n - m - 1)
    return sum(hook_dim(doubled(nu)) for nu in partitions(n) if dominates(nu, hook))


# --- tableaux --------------------------------------------------------------

@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        n = sum(shape)
        if not is_partition(shape) or sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError(f"{rows!r} is not a tableau of a partition shape")
        for r in rows:
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                raise ValueError(f"{rows!r} has a row that is not increasing")
        for i in range(len(rows) - 1):
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                raise ValueError(f"{rows!r} has a column that is not increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        return {x: (i + 1, j + 1) for i, r in enumerate(self.rows) for j, x in enumerate(r)}

    def position(self, k: int) -> tuple[int, int]:
        """(row, column) of entry ``k``, both 1-based."""
        return self._positions[k]

    def content(self, k: int) -> int:
        r, c = self.position(k)
        return c - r

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def conjugate(self) -> "StandardTableau":
        cols = conjugate(self.shape)
        return StandardTableau(tuple(tuple(self.rows[i][j] for i in range(cols[j])) for j in range(len(cols))))

    def restrict(self, k: int) -> Partition:
        """Shape of the subtableau holding ``1..k``."""
        return tuple(x for x in (sum(1 for v in r if v <= k) for r in self.rows) if x)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def initial_tableau(lam: Sequence[int]) -> StandardTableau:
    """``t^lambda``: 1..n along successive rows."""
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(range(k, k + part)))
        k += part
    return StandardTableau(tuple(rows))


def final_tableau(lam: Sequence[int]) -> StandardTableau:
    """``t_lambda``: 1..n down successive columns."""
    return initial_tableau(conjugate(lam)).conjugate()


def std_tableaux(lam: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of shape lam, in lexicographic order of reading words."""
    lam = tuple(lam)
    n = sum(lam)
    if n > MAX_TABLEAU_SIZE:
        raise GuardError(f"tableau enumeration is limited to |lambda| <= {MAX_TABLEAU_SIZE}")
    return list(_std_tableaux(lam))


@lru_cache(maxsize=None)
def _std_tableaux(lam: Partition) -> tuple[StandardTableau, ...]:
    n = sum(lam)
    found = []

    def grow(rows: list[list[int]], k: int):
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                grow(rows, k + 1)
                rows[i].pop()

    grow([[] for _ in lam], 1)
    tabs = [StandardTableau(r) for r in found]
    tabs.sort(key=lambda t: t.reading_word())
    return tuple(tabs)


def d_of_t(t: StandardTableau) -> Permutation:
    """The permutation with ``t^lambda d(t) = t``."""
    return t.reading_word()


def w_lambda(lam: Sequence[int]) -> Permutation:
    return d_of_t(final_tableau(lam))


def tableau_dominates(u: StandardTableau, s: StandardTableau) -> bool:
    """``u`` dominates ``s``: each restriction shape of u dominates that of s."""
    if u.n != s.n:
        raise ValueError("tableaux of different sizes")
    return all(dominates(u.restrict(k), s.restrict(k)) for k in range(1, u.n + 1))


# --- the symmetric group as an indexed set ----------------------------------

@dataclass(frozen=True)
class SymmetricGroup:
    """Elements of S_n in lexicographic order, with a multiplication table."""

    n: int

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(perm.all_permutations(self.n))

    @cached_property
    def index(self) -> dict[Permutation, int]:
        return {w: i for i, w in enumerate(self.elements)}

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        if self.n > MAX_TABLE_N:
            raise GuardError(f"multiplication tables are limited to n <= {MAX_TABLE_N}")
        P = np.array(self.elements, dtype=np.int64) - 1
        N = len(P)
        weights = self.n ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        codes = P @ weights
        out = np.empty((N, N), dtype=np.int64)
        for i in range(N):
            comp = P[:, P[i]]          # row j: (k) u_i u_j = u_j[u_i[k]]
            out[i] = np.searchsorted(codes, comp @ weights)
        return out

    @property
    def order(self) -> int:
        return factorial(self.n)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


# --- group algebra ---------------------------------------------------------

_DENSE_THRESHOLD = 4096


class GroupAlgebraElement:
    """A finitely supported map from S_n to nonzero scalars of ``ring``."""

    __slots__ = ("n", "ring", "terms")

    def __init__(self, n: int, ring: Ring = ZZ, terms: Mapping[Permutation, object] | None = None):
        self.n = n
        self.ring = ring
        clean = {}
        for w, c in (terms or {}).items():
            if len(w) != n:
                raise ValueError(f"{w} is not in S_{n}")
            c = ring(c)
            if c:
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def basis(cls, w: Permutation, ring: Ring = ZZ, coeff=1) -> "GroupAlgebraElement":
        return cls(len(w), ring, {tuple(w): coeff})

    @classmethod
    def one(cls, n: int, ring: Ring = ZZ) -> "GroupAlgebraElement":
        return cls.basis(perm.identity(n), ring)

    @classmethod
    def zero(cls, n: int, ring: Ring = ZZ) -> "GroupAlgebraElement":
        return cls(n, ring)

    def _like(self, terms) -> "GroupAlgebraElement":
        out = GroupAlgebraElement.__new__(GroupAlgebraElement)
        out.n, out.ring = self.n, self.ring
        out.terms = {w: c for w, c in terms.items() if c}
        return out

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"S_{self.n} and S_{other.n} elements do not mix")
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} and {other.ring!r} elements do not mix")

    def coefficient(self, w: Permutation):
        return self.terms.get(tuple(w), self.ring.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            other = GroupAlgebraElement.one(self.n, self.ring).scale(other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "GroupAlgebraElement":
        c = self.ring(c)
        return self._like({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return group_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(self.ring.one / self.ring(c))

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def change_ring(self, ring: Ring) -> "GroupAlgebraElement":
        def conv(c):
            if isinstance(c, Mod):
                raise RingMismatchError("cannot lift GF(p) coefficients")
            if ring == QQ or not hasattr(c, "denominator") or c.denominator == 1:
                return ring(int(c)) if not hasattr(c, "denominator") or c.denominator == 1 else ring(c)
            if isinstance(ring, PrimeField):
                return ring(c.numerator) * ring(c.denominator).inverse()
            raise RingMismatchError(f"{c} does not lie in {ring!r}")
        return GroupAlgebraElement(self.n, ring, {w: conv(c) for w, c in self.terms.items()})

    def to_vector(self) -> list:
        G = symmetric_group(self.n)
        v = [self.ring.zero] * G.order
        for w, c in self.terms.items():
            v[G.index[w]] = c
        return v

    def to_brauer(self, delta=None):
        from .algebra import AlgebraElement
        from .diagram import permutation_diagram
        return AlgebraElement(self.n, self.ring, delta,
                              {permutation_diagram(w): c for w, c in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"({c})*{w}" for w, c in sorted(self.terms.items()))
        return f"<{self.ring.tag}S_{self.n}: {body or '0'}>"


def _to_int_dense(x: GroupAlgebraElement, G: SymmetricGroup):
    """Integer coefficient vector and common denominator (Z or Q only)."""
    den = 1
    for c in x.terms.values():
        d = getattr(c, "denominator", 1)
        if d != 1:
            den = den * d // np.gcd(den, d)
    v = np.zeros(G.order, dtype=object)
    for w, c in x.terms.items():
        v[G.index[w]] = int(c * den) if den != 1 else int(c)
    return v, den


def group_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    a._check(b)
    n = a.n
    dense = (len(a.terms) * len(b.terms) > _DENSE_THRESHOLD and n <= MAX_TABLE_N
             and isinstance(a.ring, (RationalField, type(ZZ), PrimeField)))
    if not dense:
        out: dict = {}
        for u, cu in a.terms.items():
            for w, cw in b.terms.items():
                uw = perm.compose(u, w)
                c = cu * cw
                out[uw] = out[uw] + c if uw in out else c
        return a._like(out)
    G = symmetric_group(n)
    T = G.table
    if isinstance(a.ring, PrimeField):
        p = a.ring.p
        bv = np.zeros(G.order, dtype=np.int64)
        for w, c in b.terms.items():
            bv[G.index[w]] = c.value
        acc = np.zeros(G.order, dtype=np.int64)
        for u, cu in a.terms.items():
            acc[T[G.index[u]]] = (acc[T[G.index[u]]] + cu.value * bv) % p
        return a._like({G.elements[i]: a.ring(int(acc[i])) for i in np.flatnonzero(acc)})
    av, da = _to_int_dense(a, G)
    bv, db = _to_int_dense(b, G)
    acc = np.zeros(G.order, dtype=object)
    for i in np.flatnonzero(av):
        row = T[i]
        acc[row] = acc[row] + av[i] * bv
    den = da * db
    ring = a.ring
    if den == 1:
        return a._like({G.elements[i]: ring(int(acc[i])) for i in range(G.order) if acc[i]})
    from fractions import Fraction
    return a._like({G.elements[i]: Fraction(int(acc[i]), den) for i in range(G.order) if acc[i]})


def young_subgroup(comp: Sequence[int]) -> Iterator[Permutation]:
    """Elements of S_{comp_1} x S_{comp_2} x ... acting on consecutive blocks."""
    blocks, start = [], 1
    for part in comp:
        blocks.append(list(range(start, start + part)))
        start += part
    n = start - 1
    for choice in product(*[list(_perms(b)) for b in blocks]):
        w = [0] * n
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                w[src - 1] = dst
        yield tuple(w)


def x_lambda(comp: Sequence[int], ring: Ring = ZZ) -> GroupAlgebraElement:
    n = sum(comp)
    return GroupAlgebraElement(n, ring, {w: 1 for w in young_subgroup(comp)})


def y_lambda(comp: Sequence[int], ring: Ring = ZZ) -> GroupAlgebraElement:
    n = sum(comp)
    return GroupAlgebraElement(n, ring, {w: perm.sign(w) for w in young_subgroup(comp)})


def _perm_elem(w: Permutation, ring: Ring) -> GroupAlgebraElement:
    return GroupAlgebraElement.basis(w, ring)


def murphy_x(s: StandardTableau, t: StandardTableau, ring: Ring = ZZ) -> GroupAlgebraElement:
    """``X_{st} = d(s)^{-1} X_lambda d(t)``."""
    if s.shape != t.shape:
        raise ValueError(f"shapes {s.shape} and {t.shape} differ")
    return _perm_elem(perm.inverse(d_of_t(s)), ring) * x_lambda(s.shape, ring) * _perm_elem(d_of_t(t), ring)


def murphy_y(s: StandardTableau, t: StandardTableau, ring: Ring = ZZ) -> GroupAlgebraElement:
    if s.shape != t.shape:
        raise ValueError(f"shapes {s.shape} and {t.shape} differ")
    return _perm_elem(perm.inverse(d_of_t(s)), ring) * y_lambda(s.shape, ring) * _perm_elem(d_of_t(t), ring)


def murphy_basis(n: int, ring: Ring = ZZ, kind: str = "x") -> list[tuple[Partition, StandardTableau, StandardTableau, GroupAlgebraElement]]:
    build = murphy_x if kind == "x" else murphy_y
    out = []
    for lam in partitions(n):
        tabs = std_tableaux(lam)
        for s in tabs:
            for t in tabs:
                out.append((lam, s, t, build(s, t, ring)))
    return out


def z_lambda(lam: Sequence[int], ring: Ring = ZZ) -> GroupAlgebraElement:
    """``X_lambda w_lambda Y_{lambda'}``."""
    return x_lambda(lam, ring) * _perm_elem(w_lambda(lam), ring) * y_lambda(conjugate(lam), ring)


def tau(h: GroupAlgebraElement) -> GroupAlgebraElement:
    """The automorphism with ``s_i -> -s_i``: ``w -> (-1)^{l(w)} w``."""
    return h._like({w: (-c if perm.length(w) % 2 else c) for w, c in h.terms.items()})


def sym_generator(i: int, n: int, ring: Ring = ZZ) -> GroupAlgebraElement:
    return _perm_elem(perm.simple(i, n), ring)
