"""Brauer n-diagrams: perfect matchings of the labels 1..2n.

Top vertices are ``1..n`` left to right.  The bottom vertex under position
``i`` carries the label ``bar(i) = 2n + 1 - i``, so the bottom-left vertex is
``2n``.  All formulas in this package use that labelling directly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator

from . import permutations as perm
from .permutations import Permutation

MAX_ENUMERATION_N = 6


class DiagramError(ValueError):
    pass


def bar(i: int, n: int) -> int:
    """The label of the bottom vertex under top position ``i`` (and vice versa)."""
    return 2 * n + 1 - i


@dataclass(frozen=True)
class BrauerDiagram:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        seen = sorted(x for e in canon for x in e)
        if self.n < 0 or seen != list(range(1, 2 * self.n + 1)):
            raise DiagramError(f"edges {self.edges!r} are not a perfect matching of 1..{2 * self.n}")
        object.__setattr__(self, "edges", canon)

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """``partner[v]`` is the vertex joined to ``v``; index 0 is unused."""
        p = [0] * (2 * self.n + 1)
        for a, b in self.edges:
            p[a] = b
            p[b] = a
        return tuple(p)

    def is_top(self, v: int) -> bool:
        return v <= self.n

    @property
    def top_horizontal(self) -> list[tuple[int, int]]:
        return [e for e in self.edges if e[1] <= self.n]

    @property
    def bottom_horizontal(self) -> list[tuple[int, int]]:
        return [e for e in self.edges if e[0] > self.n]

    @property
    def f(self) -> int:
        return len(self.top_horizontal)

    def is_permutation(self) -> bool:
        return self.f == 0

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise DiagramError("diagram has horizontal edges")
        n = self.n
        return tuple(bar(self.partner[i], n) for i in range(1, n + 1))

    def to_text(self) -> str:
        return f"n={self.n}; edges=" + "".join(f"({a},{b})" for a, b in self.edges)

    def __str__(self):
        return self.to_text()


_TEXT = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*edges\s*=\s*((?:\(\s*\d+\s*,\s*\d+\s*\)\s*)*)$")


def parse_diagram(text: str) -> BrauerDiagram:
    m = _TEXT.match(text)
    if not m:
        raise DiagramError(f"cannot parse diagram {text!r}")
    n = int(m.group(1))
    edges = tuple((int(a), int(b)) for a, b in re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", m.group(2)))
    if len(edges) != n:
        raise DiagramError(f"expected {n} edges, found {len(edges)}")
    return BrauerDiagram(n, edges)


def identity_diagram(n: int) -> BrauerDiagram:
    return BrauerDiagram(n, tuple((i, bar(i, n)) for i in range(1, n + 1)))


def permutation_diagram(w: Permutation) -> BrauerDiagram:
    """Edges ``{i, bar((i)w)}``; permutation diagrams multiply like permutations."""
    n = len(w)
    return BrauerDiagram(n, tuple((i, bar(w[i - 1], n)) for i in range(1, n + 1)))


def generator_s(i: int, n: int) -> BrauerDiagram:
    if not 1 <= i <= n - 1:
        raise DiagramError(f"s_{i} needs 1 <= i <= {n - 1}")
    return permutation_diagram(perm.simple(i, n))


def generator_e(i: int, n: int) -> BrauerDiagram:
    if not 1 <= i <= n - 1:
        raise DiagramError(f"e_{i} needs 1 <= i <= {n - 1}")
    edges = [(i, i + 1), (bar(i, n), bar(i + 1, n))]
    edges += [(k, bar(k, n)) for k in range(1, n + 1) if k not in (i, i + 1)]
    return BrauerDiagram(n, tuple(edges))


def concat(D1: BrauerDiagram, D2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack ``D1`` above ``D2``; return the composite and its interior loop count."""
    if D1.n != D2.n:
        raise DiagramError(f"cannot compose a {D1.n}-diagram with a {D2.n}-diagram")
    return _concat(D1, D2)


@lru_cache(maxsize=1 << 18)
def _concat(D1: BrauerDiagram, D2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    n = D1.n
    p1, p2 = D1.partner, D2.partner
    m = 2 * n + 1
    # Middle row position k is D1's bottom vertex m-k glued to D2's top vertex k.
    seen_mid = [False] * (n + 1)
    done = [False] * m
    edges = []

    def from_d1_bottom(k):
        # entering D1 upward at its bottom position k
        while True:
            seen_mid[k] = True
            u = p1[m - k]
            if u <= n:
                return u
            k = m - u
            seen_mid[k] = True
            w = p2[k]
            if w > n:
                return w
            k = w

    def from_d2_top(k):
        # entering D2 downward at its top position k
        while True:
            seen_mid[k] = True
            w = p2[k]
            if w > n:
                return w
            k = w
            seen_mid[k] = True
            u = p1[m - k]
            if u <= n:
                return u
            k = m - u

    for v in range(1, n + 1):
        if done[v]:
            continue
        u = p1[v]
        end = u if u <= n else from_d2_top(m - u)
        edges.append((v, end))
        done[v] = done[end] = True
    for v in range(n + 1, m):
        if done[v]:
            continue
        u = p2[v]
        end = u if u > n else from_d1_bottom(u)
        edges.append((v, end))
        done[v] = done[end] = True

    loops = 0
    for k in range(1, n + 1):
        if seen_mid[k]:
            continue
        loops += 1
        j = k
        while not seen_mid[j]:
            seen_mid[j] = True
            j = m - p1[m - j]      # across D1's bottom horizontal edge
            seen_mid[j] = True
            j = p2[j]              # across D2's top horizontal edge
    return BrauerDiagram(n, tuple(edges)), loops


@dataclass(frozen=True)
class NormalForm:
    """``D = d1^{-1} e_1 e_3 ... e_{2f-1} sigma d2`` with ``d1, d2`` coset representatives."""

    d1: Permutation
    f: int
    sigma: Permutation
    d2: Permutation

    @property
    def n(self) -> int:
        return len(self.d1)


def in_coset_set(d: Permutation, f: int) -> bool:
    """Membership in the set of distinguished representatives D_f."""
    if any(d[2 * j - 2] > d[2 * j - 1] for j in range(1, f + 1)):
        return False
    odds = [d[2 * j - 2] for j in range(1, f + 1)]
    rest = list(d[2 * f:])
    return odds == sorted(odds) and rest == sorted(rest)


def normal_form(D: BrauerDiagram) -> NormalForm:
    n = D.n
    top = sorted(D.top_horizontal)
    # bottom horizontal edges as pairs of positions
    bot = sorted(tuple(sorted((bar(a, n), bar(b, n)))) for a, b in D.bottom_horizontal)
    f = len(top)
    d1 = [x for pair in top for x in pair]
    d1 += [v for v in range(1, n + 1) if v not in set(d1)]
    d2 = [x for pair in bot for x in pair]
    d2 += [q for q in range(1, n + 1) if q not in set(d2)]
    d2inv = perm.inverse(tuple(d2))
    sigma = list(range(1, n + 1))
    for j in range(2 * f + 1, n + 1):
        q = bar(D.partner[d1[j - 1]], n)
        sigma[j - 1] = d2inv[q - 1]
    return NormalForm(tuple(d1), f, tuple(sigma), tuple(d2))


def from_normal_form(nf: NormalForm) -> BrauerDiagram:
    n, f = nf.n, nf.f
    d1, d2, s = nf.d1, nf.d2, nf.sigma
    edges = []
    for i in range(1, f + 1):
        edges.append((d1[2 * i - 2], d1[2 * i - 1]))
        edges.append((bar(d2[2 * i - 2], n), bar(d2[2 * i - 1], n)))
    for j in range(2 * f + 1, n + 1):
        edges.append((d1[j - 1], bar(d2[s[j - 1] - 1], n)))
    return BrauerDiagram(n, tuple(edges))


def length(D: BrauerDiagram) -> int:
    nf = normal_form(D)
    return perm.length(nf.d1) + perm.length(nf.d2) + perm.length(nf.sigma)


@lru_cache(maxsize=1 << 16)
def sign(D: BrauerDiagram) -> int:
    nf = normal_form(D)
    ell = perm.length(nf.d1) + perm.length(nf.d2) + perm.length(nf.sigma)
    return -1 if (nf.f + ell) % 2 else 1


def _matchings(labels: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not labels:
        yield []
        return
    a, rest = labels[0], labels[1:]
    for k, b in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(a, b)] + tail


def enumerate_diagrams(n: int) -> list[BrauerDiagram]:
    """All (2n-1)!! diagrams, ordered lexicographically by canonical edge list."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise DiagramError(f"diagram enumeration is limited to 1 <= n <= {MAX_ENUMERATION_N}")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[BrauerDiagram, ...]:
    return tuple(BrauerDiagram(n, tuple(m)) for m in _matchings(list(range(1, 2 * n + 1))))


@dataclass(frozen=True)
class DiagramBasis:
    """The frozen enumeration of Bd_n with a reverse index."""

    n: int
    diagrams: tuple[BrauerDiagram, ...] = field(repr=False)
    index: dict = field(repr=False, compare=False, hash=False)

    def __len__(self):
        return len(self.diagrams)


@lru_cache(maxsize=None)
def diagram_basis(n: int) -> DiagramBasis:
    ds = tuple(enumerate_diagrams(n))
    return DiagramBasis(n, ds, {d: i for i, d in enumerate(ds)})


def double_factorial_odd(n: int) -> int:
    out = 1
    for k in range(2 * n - 1, 0, -2):
        out *= k
    return out


def crossings(D: BrauerDiagram) -> int:
    """Crossings of the straight-line drawing with horizontal edges as arcs.

    Only used as an independent cross-check of ``sign`` on small diagrams: the
    standard drawing puts top vertices at x = 1..n on one line and bottom
    vertices under them on another, top arcs bulging down and bottom arcs up.
    """
    n = D.n
    def pos(v):
        return (v, 1) if v <= n else (bar(v, n), 0)
    count = 0
    es = D.edges
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            count += _edges_cross(pos(es[i][0]), pos(es[i][1]), pos(es[j][0]), pos(es[j][1]))
    return count


def _edges_cross(a, b, c, d) -> int:
    arc1, arc2 = a[1] == b[1], c[1] == d[1]
    if not arc1 and not arc2:
        ta, ba = (a[0], b[0]) if a[1] == 1 else (b[0], a[0])
        tc, bc = (c[0], d[0]) if c[1] == 1 else (d[0], c[0])
        return int((ta - tc) * (ba - bc) < 0)
    if arc1 and arc2:
        if a[1] != c[1]:
            return 0
        x1, x2 = sorted((a[0], b[0]))
        y1, y2 = sorted((c[0], d[0]))
        return int(x1 < y1 < x2 < y2 or y1 < x1 < y2 < x2)
    if not arc1:
        a, b, c, d = c, d, a, b
    # (a, b) is an arc; the vertical edge crosses it iff its foot on that row lies inside
    x1, x2 = sorted((a[0], b[0]))
    foot = c[0] if c[1] == a[1] else d[0]
    return int(x1 < foot < x2)
