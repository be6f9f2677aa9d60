"""Jucys-Murphy operators and Murphy's seminormal basis of QS_n.

Everything here lives over the rationals.  ``property_suite`` bundles the
structural identities (idempotents, matrix units, the z_lambda lemmas) into a
list of named checks that the CLI and the acceptance tests both consume.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable

from . import permutations as perm
from .linalg import SpanBasis
from .rings import QQ, Ring, UnsupportedRingError
from .symgroup import (
    GroupAlgebraElement,
    StandardTableau,
    conjugate,
    final_tableau,
    initial_tableau,
    murphy_x,
    partitions,
    std_tableaux,
    strictly_dominates,
    sym_generator,
    tableau_dominates,
    w_lambda,
    x_lambda,
    y_lambda,
    z_lambda,
)


def _require_rational(ring: Ring) -> None:
    if ring != QQ:
        raise UnsupportedRingError("seminormal forms are only defined here over QQ")


@lru_cache(maxsize=None)
def jm_element(k: int, n: int) -> GroupAlgebraElement:
    """``L_k`` from ``L_1 = 0`` and ``L_{i+1} = s_i L_i s_i + s_i``."""
    if not 1 <= k <= n:
        raise ValueError(f"L_{k} needs 1 <= k <= {n}")
    if k == 1:
        return GroupAlgebraElement.zero(n, QQ)
    s = sym_generator(k - 1, n, QQ)
    return s * jm_element(k - 1, n) * s + s


def contents(t: StandardTableau) -> tuple[int, ...]:
    return tuple(t.content(k) for k in range(1, t.n + 1))


def admissible_contents(k: int) -> tuple[int, ...]:
    """The set R(k) of values cont_t(k) can take."""
    return tuple(d for d in range(-k + 1, k) if not (d == 0 and k in (2, 3)))


def _factors(t: StandardTableau) -> list[tuple[int, int]]:
    """``(k, c)`` pairs for the factors (L_k - c)/(cont_t(k) - c), in product order."""
    out = []
    for k in range(1, t.n + 1):
        ck = t.content(k)
        out.extend((k, c) for c in admissible_contents(k) if c != ck)
    return out


def _factor(t: StandardTableau, k: int, c: int) -> GroupAlgebraElement:
    n = t.n
    L = jm_element(k, n)
    return (L - GroupAlgebraElement.one(n, QQ).scale(c)).scale(Fraction(1, t.content(k) - c))


def F_t(t: StandardTableau, ring: Ring = QQ, order: Iterable[tuple[int, int]] | None = None) -> GroupAlgebraElement:
    """The primitive idempotent attached to ``t``.

    ``order`` lets a caller multiply the factors in another order; the
    default is increasing k, then increasing c.
    """
    _require_rational(ring)
    if order is None:
        return _F_cached(t)
    out = GroupAlgebraElement.one(t.n, QQ)
    for k, c in order:
        out = out * _factor(t, k, c)
    return out


@lru_cache(maxsize=None)
def _F_cached(t: StandardTableau) -> GroupAlgebraElement:
    out = GroupAlgebraElement.one(t.n, QQ)
    for k, c in _factors(t):
        out = out * _factor(t, k, c)
    return out


def F_lambda(lam) -> GroupAlgebraElement:
    tabs = std_tableaux(lam)
    total = GroupAlgebraElement.zero(sum(lam), QQ)
    for t in tabs:
        total = total + F_t(t)
    return total


def addable_nodes(mu) -> list[tuple[int, int]]:
    nodes = [(i + 1, mu[i] + 1) for i in range(len(mu)) if i == 0 or mu[i - 1] > mu[i]]
    return nodes + [(len(mu) + 1, 1)]


def removable_nodes(mu) -> list[tuple[int, int]]:
    return [(i + 1, mu[i]) for i in range(len(mu)) if i == len(mu) - 1 or mu[i + 1] < mu[i]]


@dataclass(frozen=True)
class GammaData:
    t: StandardTableau
    add: tuple[tuple[tuple[int, int], ...], ...]
    rem: tuple[tuple[tuple[int, int], ...], ...]
    value: Fraction


def gamma_data(t: StandardTableau) -> GammaData:
    adds, rems = [], []
    value = Fraction(1)
    for k in range(1, t.n + 1):
        row, _ = t.position(k)
        ck = t.content(k)
        shape = t.restrict(k)
        a = tuple(x for x in addable_nodes(shape) if x[0] > row)
        r = tuple(x for x in removable_nodes(shape) if x[0] > row)
        for i, j in a:
            value *= ck - (j - i)
        for i, j in r:
            value /= ck - (j - i)
        adds.append(a)
        rems.append(r)
    return GammaData(t, tuple(adds), tuple(rems), value)


def gamma(t: StandardTableau) -> Fraction:
    return gamma_data(t).value


@lru_cache(maxsize=None)
def f_st(s: StandardTableau, t: StandardTableau) -> GroupAlgebraElement:
    """``F_s X_st F_t``."""
    if s.shape != t.shape:
        raise ValueError(f"shapes {s.shape} and {t.shape} differ")
    return F_t(s) * murphy_x(s, t, QQ) * F_t(t)


def f_tilde(s: StandardTableau, t: StandardTableau) -> GroupAlgebraElement:
    return f_st(s, t) / gamma(t)


# --- property suite --------------------------------------------------------

@dataclass
class Check:
    name: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed,
                "pass": self.passed}


def _all_tableaux(n: int) -> list[StandardTableau]:
    return [t for lam in partitions(n) for t in std_tableaux(lam)]


def murphy_span(n: int, keep: Callable[[tuple, StandardTableau, StandardTableau], bool],
                field: Ring = QQ) -> SpanBasis:
    """Span of the Murphy elements X_uv whose (shape, u, v) satisfy ``keep``."""
    sb = SpanBasis(factorial(n), field)
    rows = []
    for lam in partitions(n):
        tabs = std_tableaux(lam)
        for u in tabs:
            for v in tabs:
                if keep(lam, u, v):
                    rows.append(murphy_x(u, v, field).to_vector())
    if rows:
        sb.insert_many(rows)
    return sb


def _above_span(lam) -> SpanBasis:
    n = sum(lam)
    return murphy_span(n, lambda mu, u, v: strictly_dominates(mu, lam))


def check_idempotents(n: int) -> Check:
    tabs = _all_tableaux(n)
    bad = 0
    for s in tabs:
        Fs = F_t(s)
        for t in tabs:
            prod_ = Fs * F_t(t)
            want = Fs if s == t else GroupAlgebraElement.zero(n, QQ)
            bad += prod_ != want
    return Check(f"F_s F_t = delta_st F_s (n={n})", 0, bad)


def check_resolution(n: int) -> Check:
    total = GroupAlgebraElement.zero(n, QQ)
    for t in _all_tableaux(n):
        total = total + F_t(t)
    return Check(f"sum of F_t is 1 (n={n})", True, total == GroupAlgebraElement.one(n, QQ))


def check_central(n: int) -> Check:
    bad = 0
    for lam in partitions(n):
        F = F_lambda(lam)
        for i in range(1, n):
            s = sym_generator(i, n, QQ)
            bad += F * s != s * F
    return Check(f"F_lambda central (n={n})", 0, bad)


def check_jm_commute(n: int) -> Check:
    bad = sum(jm_element(i, n) * jm_element(j, n) != jm_element(j, n) * jm_element(i, n)
              for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return Check(f"L_i L_j = L_j L_i (n={n})", 0, bad)


def check_factor_order(n: int) -> Check:
    bad = 0
    for t in _all_tableaux(n):
        fs = _factors(t)
        bad += F_t(t, order=list(reversed(fs))) != F_t(t)
    return Check(f"F_t independent of factor order (n={n})", 0, bad)


def check_matrix_units(n: int) -> Check:
    pairs = [(s, t) for lam in partitions(n) for s in std_tableaux(lam) for t in std_tableaux(lam)]
    ft = {p: f_tilde(*p) for p in pairs}
    bad = 0
    zero = GroupAlgebraElement.zero(n, QQ)
    for (s, t) in pairs:
        for (u, v) in pairs:
            want = ft[(s, v)] if t == u else zero
            bad += ft[(s, t)] * ft[(u, v)] != want
    return Check(f"f~_st f~_uv = delta_tu f~_sv (n={n})", 0, bad)


def check_ftt(n: int) -> Check:
    bad = sum(f_st(t, t) != F_t(t).scale(gamma(t)) for t in _all_tableaux(n))
    return Check(f"f_tt = gamma_t F_t (n={n})", 0, bad)


def check_gamma_initial(n: int) -> Check:
    bad = [lam for lam in partitions(n)
           if gamma(initial_tableau(lam)) != prod(factorial(x) for x in lam)]
    return Check(f"gamma(t^lambda) = [lambda]! (n={n})", [], bad)


def check_z_lemma(n: int) -> Check:
    bad = []
    for lam in partitions(n):
        lhs = z_lambda(lam, QQ)
        rhs = f_st(initial_tableau(lam), final_tableau(lam)).scale(gamma(initial_tableau(conjugate(lam))))
        if lhs != rhs:
            bad.append(lam)
    return Check(f"z_lambda = gamma(t^lambda') f_(t^lambda t_lambda) (n={n})", [], bad)


def two_row_shapes(n: int) -> list[tuple[int, ...]]:
    return [(n - k, k) if k else (n,) for k in range(n // 2 + 1)]


def check_two_row_z(n: int) -> Check:
    """z_lambda = 2^k f_(t^lambda t_lambda) for two-row lambda = (n-k, k)."""
    bad = []
    for lam in two_row_shapes(n):
        k = lam[1] if len(lam) > 1 else 0
        if z_lambda(lam, QQ) != f_st(initial_tableau(lam), final_tableau(lam)).scale(2 ** k):
            bad.append(lam)
    return Check(f"two-row z_lambda = 2^k f (n={n})", [], bad)


def check_two_row_congruence(n: int) -> Check:
    """z_lambda = 2^k X_(t^lambda t_lambda) modulo the cell ideal strictly above lambda."""
    bad = []
    for lam in two_row_shapes(n):
        k = lam[1] if len(lam) > 1 else 0
        diff = z_lambda(lam, QQ) - murphy_x(initial_tableau(lam), final_tableau(lam), QQ).scale(2 ** k)
        if not _above_span(lam).contains(diff.to_vector()):
            bad.append(lam)
    return Check(f"two-row z_lambda = 2^k X mod the ideal above lambda (n={n})", [], bad)


def check_two_row_y_identity(n: int) -> Check:
    """Y_{lam'} w_{lam'} X_lam w_lam Y_{lam'} = 2^k Y_{lam'} w_{lam'} X_lam w_lam over Z."""
    from .rings import ZZ
    bad = []
    for lam in two_row_shapes(n):
        k = lam[1] if len(lam) > 1 else 0
        lc = conjugate(lam)
        Y = y_lambda(lc, ZZ)
        left = Y * GroupAlgebraElement.basis(w_lambda(lc), ZZ) * x_lambda(lam, ZZ) \
            * GroupAlgebraElement.basis(w_lambda(lam), ZZ)
        if left * Y != left.scale(2 ** k):
            bad.append(lam)
    return Check(f"Y w' X w Y = 2^k Y w' X w (n={n})", [], bad)


def check_y_kills_above(n: int) -> Check:
    from .rings import ZZ
    bad = 0
    for lam in partitions(n):
        Y = y_lambda(conjugate(lam), ZZ)
        for mu in partitions(n):
            if not strictly_dominates(mu, lam):
                continue
            tabs = std_tableaux(mu)
            for u in tabs:
                for v in tabs:
                    X = murphy_x(u, v, ZZ)
                    bad += not (X * Y).is_zero()
                    bad += not (Y * X).is_zero()
    return Check(f"X_uv Y_lam' = 0 = Y_lam' X_uv above lambda (n={n})", 0, bad)


def check_short_words_vanish(n: int) -> Check:
    from .rings import ZZ
    bad = 0
    for lam in partitions(n):
        wl = w_lambda(lam)
        X, Y = x_lambda(lam, ZZ), y_lambda(conjugate(lam), ZZ)
        for w in perm.all_permutations(n):
            if w != wl and perm.length(w) <= perm.length(wl):
                bad += not (X * GroupAlgebraElement.basis(w, ZZ) * Y).is_zero()
    return Check(f"X_lam w Y_lam' = 0 for short w != w_lam (n={n})", 0, bad)


def triangularity(n: int, strong: bool = False) -> list[tuple]:
    """Pairs (s, t) where f_st - X_st escapes the allowed span.

    The allowed span is the cell ideal strictly above Shape(s) plus the X_uv
    of the same shape with ``u > s or v > t`` (``and`` when ``strong``).
    """
    bad = []
    for lam in partitions(n):
        tabs = std_tableaux(lam)
        above = _above_span(lam)
        for s in tabs:
            for t in tabs:
                sb = above.copy()
                rows = []
                for u in tabs:
                    for v in tabs:
                        du = u != s and tableau_dominates(u, s)
                        dv = v != t and tableau_dominates(v, t)
                        if (du and dv) if strong else (du or dv):
                            rows.append(murphy_x(u, v, QQ).to_vector())
                if rows:
                    sb.insert_many(rows)
                if not sb.contains((f_st(s, t) - murphy_x(s, t, QQ)).to_vector()):
                    bad.append((lam, s.rows, t.rows))
    return bad


def check_triangularity(n: int) -> Check:
    return Check(f"f_st - X_st in allowed span (n={n})", [], triangularity(n))


SUITE: dict[str, tuple[Callable[[int], Check], int]] = {
    "idempotents": (check_idempotents, 5),
    "resolution": (check_resolution, 5),
    "central": (check_central, 5),
    "jm_commute": (check_jm_commute, 5),
    "factor_order": (check_factor_order, 5),
    "gamma_initial": (check_gamma_initial, 5),
    "ftt": (check_ftt, 4),
    "matrix_units": (check_matrix_units, 4),
    "z_lemma": (check_z_lemma, 5),
    "two_row_z": (check_two_row_z, 5),
    "two_row_congruence": (check_two_row_congruence, 5),
    "two_row_y": (check_two_row_y_identity, 6),
    "y_kills_above": (check_y_kills_above, 4),
    "short_words": (check_short_words_vanish, 4),
    "triangularity": (check_triangularity, 4),
}


def property_suite(n: int) -> list[Check]:
    """Run every check whose size cap admits ``n``."""
    checks = []
    for name, (fn, cap) in SUITE.items():
        if n <= cap:
            checks.append(fn(n))
    return checks
