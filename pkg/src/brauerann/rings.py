"""Exact coefficient rings: the integers, the rationals, prime fields and Z[x].

Elements are plain Python values where one exists (``int`` for Z,
``fractions.Fraction`` for Q) and small immutable classes otherwise
(:class:`Mod` for GF(p), :class:`IntPoly` for Z[x]).  A bare ``int`` is always
accepted as an operand; it stands for its image under the canonical map from
Z.  Any other mixing of element types, or of moduli, raises.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Any


class RingMismatchError(TypeError):
    """Arithmetic between incompatible scalar types or moduli."""


class UnsupportedRingError(ValueError):
    """An operation needs a field (or a specific ring) it was not given."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Mod:
    """An element of the prime field GF(p); ``value`` is kept in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if isinstance(value, Mod):
            if value.p != p:
                raise RingMismatchError(f"GF({value.p}) element given for GF({p})")
            value = value.value
        if not isinstance(value, int):
            raise RingMismatchError(f"cannot build a GF({p}) element from {type(value).__name__}")
        self.value = value % p
        self.p = p

    def _other(self, other: Any) -> int | None:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise RingMismatchError(f"GF({self.p}) and GF({other.p}) do not mix")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@total_ordering
class IntPoly:
    """A polynomial in x with integer coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, IntPoly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise RingMismatchError("IntPoly coefficients must be integers")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _other(self, other) -> "IntPoly | None":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly((other,))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self.coeffs == o.coeffs

    def __lt__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (len(self.coeffs), self.coeffs[::-1]) < (len(o.coeffs), o.coeffs[::-1])

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                body = f"{c}{mono}"
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += f"-{t[1:]}" if t.startswith("-") else f"+{t}"
        return out


class Ring:
    """Descriptor of a coefficient ring.  Calling it coerces a value in."""

    tag: str
    characteristic: int
    is_field: bool

    def __call__(self, value) -> Any:
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text: str):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


class IntegerRing(Ring):
    tag = "ZZ"
    characteristic = 0
    is_field = False

    def __call__(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, Fraction) and value.denominator == 1:
                return value.numerator
            raise RingMismatchError(f"{value!r} is not an integer")
        return value

    def parse(self, text):
        return int(text)


class RationalField(Ring):
    tag = "QQ"
    characteristic = 0
    is_field = True

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise RingMismatchError(f"{value!r} is not rational")

    def parse(self, text):
        return Fraction(text)


class PrimeField(Ring):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"GF({p})"

    def __call__(self, value):
        return Mod(value, self.p)

    def parse(self, text):
        return Mod(int(text), self.p)


class PolynomialRing(Ring):
    """Z[x]."""

    tag = "ZZ[x]"
    characteristic = 0
    is_field = False

    def __call__(self, value):
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return IntPoly((value,))
        raise RingMismatchError(f"{value!r} is not in Z[x]")

    @property
    def x(self) -> IntPoly:
        return IntPoly.x()

    def parse(self, text):
        return parse_intpoly(text)


ZZ = IntegerRing()
QQ = RationalField()
ZZx = PolynomialRing()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def ring_from_tag(tag: str) -> Ring:
    if tag == "ZZ":
        return ZZ
    if tag == "QQ":
        return QQ
    if tag == "ZZ[x]":
        return ZZx
    if tag.startswith("GF(") and tag.endswith(")"):
        return GF(int(tag[3:-1]))
    raise ValueError(f"unknown ring tag {tag!r}")


def parse_intpoly(text: str) -> IntPoly:
    """Parse the output of ``str(IntPoly)``, e.g. ``x^2-3x+1``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return IntPoly()
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        term = s[i + 1:j]
        if "x" in term:
            head, _, tail = term.partition("x")
            c = int(head) if head else 1
            e = int(tail[1:]) if tail.startswith("^") else 1
        else:
            c, e = int(term), 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
        i = j
    top = max(coeffs)
    return IntPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def field_for(characteristic: int | None) -> Ring:
    """QQ for ``None`` or 0, otherwise GF(p)."""
    if not characteristic:
        return QQ
    return GF(characteristic)
