"""Permutations in one-line notation, composed as right actions.

A permutation ``w`` of ``{1..n}`` is the tuple ``(w(1), ..., w(n))``.  Maps
act on the right, so the product ``u * w`` means "first ``u``, then ``w``":
``(k)(uw) = ((k)u)w``.  This is the convention under which
``t^lambda d(t) = t`` for tableaux and under which permutation diagrams
multiply like their permutations.
"""
from __future__ import annotations

from itertools import permutations as _iter_perms
from typing import Iterator, Sequence

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def compose(u: Permutation, w: Permutation) -> Permutation:
    """The product ``u w`` (apply ``u`` first)."""
    return tuple(w[k - 1] for k in u)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def length(w: Sequence[int]) -> int:
    """Coxeter length; equals the number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def sign(w: Sequence[int]) -> int:
    return -1 if length(w) % 2 else 1


def transposition(i: int, j: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def simple(i: int, n: int) -> Permutation:
    """The Coxeter generator s_i = (i, i+1)."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} does not exist in S_{n}")
    return transposition(i, i + 1, n)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of S_n in lexicographic order of one-line notation."""
    return _iter_perms(range(1, n + 1))


def reduced_word(w: Permutation) -> list[int]:
    """Indices ``i_1..i_k`` with ``w = s_{i_1} ... s_{i_k}`` and ``k = length(w)``."""
    w = list(w)
    word: list[int] = []
    # bubble sort from the right: w s_i swaps positions i, i+1
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return word
