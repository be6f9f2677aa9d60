"""Elements of the Brauer algebra B_n(delta) over an exact ring.

The product of two diagrams is ``D1 . D2 = delta^loops (D1 o D2)``, extended
bilinearly.  The parameter ``delta`` lives inside each element, so products
across different specialisations are refused instead of silently mixed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _perms
from typing import Iterable, Mapping

from . import permutations as perm
from .diagram import (
    BrauerDiagram,
    DiagramError,
    bar,
    concat,
    generator_e,
    generator_s,
    identity_diagram,
    parse_diagram,
    permutation_diagram,
    sign as diagram_sign,
)
from .rings import Ring, RingMismatchError, ZZx, ring_from_tag


class AlgebraElement:
    """A finitely supported map from n-diagrams to nonzero scalars."""

    __slots__ = ("n", "ring", "delta", "terms")

    def __init__(self, n: int, ring: Ring, delta=None, terms: Mapping[BrauerDiagram, object] | None = None):
        if delta is None:
            if ring != ZZx:
                raise ValueError("delta is required unless the ring is Z[x]")
            delta = ZZx.x
        self.n = n
        self.ring = ring
        self.delta = ring(delta)
        clean: dict[BrauerDiagram, object] = {}
        for D, c in (terms or {}).items():
            if D.n != n:
                raise DiagramError(f"{D.n}-diagram in an element of B_{n}")
            c = ring(c)
            if c:
                clean[D] = c
        self.terms = clean

    @classmethod
    def from_diagram(cls, D: BrauerDiagram, ring: Ring, delta=None, coeff=1) -> "AlgebraElement":
        return cls(D.n, ring, delta, {D: coeff})

    @classmethod
    def one(cls, n: int, ring: Ring, delta=None) -> "AlgebraElement":
        return cls.from_diagram(identity_diagram(n), ring, delta)

    @classmethod
    def zero(cls, n: int, ring: Ring, delta=None) -> "AlgebraElement":
        return cls(n, ring, delta)

    def _like(self, terms) -> "AlgebraElement":
        out = AlgebraElement.__new__(AlgebraElement)
        out.n, out.ring, out.delta = self.n, self.ring, self.delta
        out.terms = {D: c for D, c in terms.items() if c}
        return out

    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise DiagramError(f"B_{self.n} and B_{other.n} elements do not mix")
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} and {other.ring!r} elements do not mix")
        if self.delta != other.delta:
            raise RingMismatchError(f"parameters {self.delta} and {other.delta} differ")

    def coefficient(self, D: BrauerDiagram):
        return self.terms.get(D, self.ring.zero)

    @property
    def support(self) -> list[BrauerDiagram]:
        return sorted(self.terms, key=lambda D: D.edges)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for D, c in other.terms.items():
            out[D] = out[D] + c if D in out else c
        return self._like(out)

    def __neg__(self) -> "AlgebraElement":
        return self._like({D: -c for D, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.ring(c)
        return self._like({D: c * v for D, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "AlgebraElement":
        out = AlgebraElement.one(self.n, self.ring, self.delta)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.n == other.n and self.ring == other.ring and self.delta == other.delta
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.ring, frozenset(self.terms.items())))

    def change_ring(self, ring: Ring, delta) -> "AlgebraElement":
        """Map integer (or Z[x]) coefficients into ``ring`` with x -> delta."""
        def conv(c):
            if hasattr(c, "coeffs"):
                return ring(0) + sum((ring(a) * ring(delta) ** i for i, a in enumerate(c.coeffs)), ring(0))
            return ring(int(c))
        return AlgebraElement(self.n, ring, delta, {D: conv(c) for D, c in self.terms.items()})

    def to_text(self) -> str:
        lines = [f"n={self.n}; ring={self.ring.tag}; delta={self.delta}"]
        for D in self.support:
            lines.append(f"{self.terms[D]} * {D.to_text()}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        body = " + ".join(f"({c})*[{D.to_text()}]" for D, c in sorted(self.terms.items(), key=lambda t: t[0].edges))
        return f"<B_{self.n}({self.delta}) over {self.ring.tag}: {body or '0'}>"


def parse_element(text: str) -> AlgebraElement:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = dict(part.strip().split("=", 1) for part in lines[0].split(";"))
    n = int(head["n"])
    ring = ring_from_tag(head["ring"].strip())
    delta = ring.parse(head["delta"].strip())
    terms: dict = {}
    for ln in lines[1:]:
        coeff, _, dtext = ln.partition("*")
        D = parse_diagram(dtext.strip())
        c = ring.parse(coeff.strip())
        terms[D] = terms[D] + c if D in terms else c
    return AlgebraElement(n, ring, delta, terms)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    delta = a.delta
    one = a.ring.one
    powers = [one]
    out: dict[BrauerDiagram, object] = {}
    for D1, c1 in a.terms.items():
        for D2, c2 in b.terms.items():
            D, loops = concat(D1, D2)
            while len(powers) <= loops:
                powers.append(powers[-1] * delta)
            c = c1 * c2 * powers[loops] if loops else c1 * c2
            out[D] = out[D] + c if D in out else c
    return a._like(out)


def s_elem(i: int, n: int, ring: Ring, delta=None) -> AlgebraElement:
    return AlgebraElement.from_diagram(generator_s(i, n), ring, delta)


def e_elem(i: int, n: int, ring: Ring, delta=None) -> AlgebraElement:
    return AlgebraElement.from_diagram(generator_e(i, n), ring, delta)


def perm_elem(w: perm.Permutation, ring: Ring, delta=None) -> AlgebraElement:
    return AlgebraElement.from_diagram(permutation_diagram(w), ring, delta)


@dataclass(frozen=True)
class PairingSpec:
    """Data ``(S, S', beta)`` defining the signed sum ``b(S, S', beta)``.

    ``S`` and ``S'`` are ordered tuples of distinct labels; ``beta`` pairs the
    remaining labels.  The orders of ``S`` and ``S'`` are kept as given.
    """

    S: tuple[int, ...]
    Sprime: tuple[int, ...]
    beta: tuple[tuple[int, int], ...] = ()

    def validate(self, n: int) -> None:
        if len(self.S) != len(self.Sprime):
            raise ValueError("S and S' must have the same length")
        used = list(self.S) + list(self.Sprime) + [v for e in self.beta for v in e]
        if len(set(self.S) | set(self.Sprime)) != 2 * len(self.S):
            raise ValueError("S and S' must consist of distinct labels and be disjoint")
        if sorted(used) != list(range(1, 2 * n + 1)):
            raise ValueError(f"S, S' and beta must cover 1..{2 * n} exactly once")

    @property
    def N(self) -> int:
        return len(self.S)

    def diagram(self, w: perm.Permutation, n: int) -> BrauerDiagram:
        """``D_w``: edges ``(i_k, j_{w(k)})`` together with ``beta``."""
        edges = [(self.S[k], self.Sprime[w[k] - 1]) for k in range(self.N)]
        return BrauerDiagram(n, tuple(edges) + tuple(self.beta))


def standard_pairing(a: int, b: int, n: int) -> PairingSpec:
    """``(S_{a,b}, S'_{a,b}, beta_{a+b})``."""
    if not 1 <= a + b <= n or a < 0 or b < 0:
        raise ValueError(f"need 1 <= a+b <= n, got a={a}, b={b}, n={n}")
    S = tuple(range(1, a + 1)) + tuple(bar(k, n) for k in range(a + 1, a + b + 1))
    Sp = tuple(range(a + 1, a + b + 1)) + tuple(bar(k, n) for k in range(1, a + 1))
    beta = tuple((s, bar(s, n)) for s in range(a + b + 1, n + 1))
    return PairingSpec(S, Sp, beta)


def b_element(spec: PairingSpec, n: int, ring: Ring, delta=None) -> AlgebraElement:
    """``sum_w sign(w) D_w(S, S', beta)`` with the permutation sign of ``w``."""
    spec.validate(n)
    terms: dict = {}
    for w in _perms(range(1, spec.N + 1)):
        D = spec.diagram(w, n)
        terms[D] = terms.get(D, 0) + perm.sign(w)
    return AlgebraElement(n, ring, delta, terms)


def bd_diagrams(a: int, b: int, n: int) -> list[BrauerDiagram]:
    """The set Bd(a, b), listed through its bijection with S_{a+b}."""
    spec = standard_pairing(a, b, n)
    return [spec.diagram(w, n) for w in _perms(range(1, a + b + 1))]


def E_element(a: int, b: int, n: int, ring: Ring, delta=None) -> AlgebraElement:
    """``E_{a,b} = sum over Bd(a,b) of sign(D) D`` with the normal-form sign."""
    if a < 0 or b < 0 or not 1 <= a + b <= n:
        raise ValueError(f"E_{{a,b}} needs 1 <= a+b <= n (a={a}, b={b}, n={n})")
    return AlgebraElement(n, ring, delta, {D: diagram_sign(D) for D in bd_diagrams(a, b, n)})


def E_i(i: int, m: int, n: int, ring: Ring, delta=None) -> AlgebraElement:
    """``E_i = E_{i, m+1-i}``."""
    if m + 1 > n:
        raise ValueError(f"E_i needs m+1 <= n (m={m}, n={n})")
    if not 0 <= i <= m + 1:
        raise ValueError(f"E_i needs 0 <= i <= m+1 (i={i}, m={m})")
    return E_element(i, m + 1 - i, n, ring, delta)


def block_swap_diagrams(a: int, b: int, n: int) -> tuple[BrauerDiagram, BrauerDiagram]:
    """Permutation diagrams ``w1, w2`` with ``E_{b,a} = +-w1 E_{a,b} w2``."""
    rest = [(r, bar(r, n)) for r in range(a + b + 1, n + 1)]
    w1 = [(k, bar(a + k, n)) for k in range(1, b + 1)] + [(b + k, bar(k, n)) for k in range(1, a + 1)]
    w2 = [(k, bar(b + k, n)) for k in range(1, a + 1)] + [(a + k, bar(k, n)) for k in range(1, b + 1)]
    return BrauerDiagram(n, tuple(w1 + rest)), BrauerDiagram(n, tuple(w2 + rest))


def sum_elements(items: Iterable[AlgebraElement], n: int, ring: Ring, delta=None) -> AlgebraElement:
    total = AlgebraElement.zero(n, ring, delta)
    for x in items:
        total = total + x
    return total


def presentation_relations(n: int, ring: Ring = ZZx, delta=None) -> list[tuple[str, AlgebraElement, AlgebraElement]]:
    """The defining relations of B_n(delta) among the s_i, e_i, as (name, lhs, rhs)."""
    s = {i: s_elem(i, n, ring, delta) for i in range(1, n)}
    e = {i: e_elem(i, n, ring, delta) for i in range(1, n)}
    one = AlgebraElement.one(n, ring, delta)
    out = []
    for i in range(1, n):
        out.append((f"s{i}^2=1", s[i] * s[i], one))
        out.append((f"e{i}^2=x e{i}", e[i] * e[i], e[i].scale(one.delta)))
        out.append((f"e{i}s{i}=e{i}", e[i] * s[i], e[i]))
        out.append((f"s{i}e{i}=e{i}", s[i] * e[i], e[i]))
        if i + 1 < n:
            j = i + 1
            out.append((f"s{i}s{j}s{i}=s{j}s{i}s{j}", s[i] * s[j] * s[i], s[j] * s[i] * s[j]))
            out.append((f"e{i}e{j}e{i}=e{i}", e[i] * e[j] * e[i], e[i]))
            out.append((f"e{j}e{i}e{j}=e{j}", e[j] * e[i] * e[j], e[j]))
            out.append((f"s{i}e{j}e{i}=s{j}e{i}", s[i] * e[j] * e[i], s[j] * e[i]))
            out.append((f"e{j}e{i}s{j}=e{j}s{i}", e[j] * e[i] * s[j], e[j] * s[i]))
        for j in range(i + 2, n):
            out.append((f"s{i}s{j}=s{j}s{i}", s[i] * s[j], s[j] * s[i]))
            out.append((f"s{i}e{j}=e{j}s{i}", s[i] * e[j], e[j] * s[i]))
            out.append((f"e{i}s{j}=s{j}e{i}", e[i] * s[j], s[j] * e[i]))
            out.append((f"e{i}e{j}=e{j}e{i}", e[i] * e[j], e[j] * e[i]))
    return out
