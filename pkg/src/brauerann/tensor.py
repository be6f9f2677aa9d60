"""The right action of B_n(m) on V^{(x)n} and the kernel of that representation.

``V`` has basis ``v_1..v_m`` with form ``(v_i, v_j) = [i + j = m + 1]``.  Basis
tensors are indexed lexicographically by ``(i_1, ..., i_n)``.  Vectors are
rows, so ``act(h1 h2) = act(h1) @ act(h2)``.

For a diagram ``D`` the matrix entry ``A[u, w]`` is 1 exactly when
  * every vertical edge ``a -- b^-`` has ``w_b = u_a``,
  * every top arc ``{a, a'}`` has ``u_a + u_a' = m + 1``,
  * every bottom arc ``{b^-, b'^-}`` has ``w_b + w_b' = m + 1``,
and 0 otherwise.  ``s_j`` and ``e_j`` are the special cases.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import AlgebraElement
from .diagram import BrauerDiagram, bar, diagram_basis, generator_e, generator_s
from .linalg import ExactMatrix, SpanBasis
from .rings import IntPoly, Mod, PrimeField, QQ, Ring, RingMismatchError, UnsupportedRingError

MAX_TENSOR_DIM = 4096
MAX_PHI_COLUMNS = 10_000
CHAR_TWO_MESSAGE = ("refused: the kernel theorems are stated for a field of "
                    "characteristic not equal to 2")


class GuardError(ValueError):
    """A size guard refused the request."""


class CharacteristicTwoError(ValueError):
    pass


def _require_odd(field: Ring) -> None:
    if isinstance(field, PrimeField) and field.p == 2:
        raise CharacteristicTwoError(CHAR_TWO_MESSAGE)


@dataclass(frozen=True)
class TensorSpace:
    m: int
    n: int
    field: Ring = QQ

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("need m >= 1 and n >= 1")
        if self.m ** self.n > MAX_TENSOR_DIM:
            raise GuardError(f"m^n = {self.m ** self.n} exceeds the guard {MAX_TENSOR_DIM}")

    @property
    def dim(self) -> int:
        return self.m ** self.n

    def index(self, seq) -> int:
        out = 0
        for i in seq:
            out = out * self.m + (i - 1)
        return out

    def sequence(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            idx, r = divmod(idx, self.m)
            out.append(r + 1)
        return tuple(reversed(out))


@lru_cache(maxsize=None)
def _digits(m: int, n: int) -> np.ndarray:
    """All basis sequences as an (m^n, n) array of values 1..m, lexicographic."""
    grid = np.indices((m,) * n).reshape(n, -1).T
    return (grid + 1).astype(np.int64)


def diagram_entries(D: BrauerDiagram, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Row and column indices of the nonzero (all equal to 1) entries of act(D)."""
    n = D.n
    U = _digits(m, n)
    weight = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    ok = np.ones(len(U), dtype=bool)
    base = np.zeros(len(U), dtype=np.int64)
    bottom_arcs = []
    for a, b in D.edges:
        if b <= n:
            ok &= U[:, a - 1] + U[:, b - 1] == m + 1
        elif a > n:
            bottom_arcs.append((bar(a, n), bar(b, n)))
        else:
            base += (U[:, a - 1] - 1) * weight[bar(b, n) - 1]
    rows = np.flatnonzero(ok)
    base = base[rows]
    offsets = np.zeros(1, dtype=np.int64)
    for p, q in bottom_arcs:
        ks = np.arange(1, m + 1, dtype=np.int64)
        arc = (ks - 1) * weight[p - 1] + (m - ks) * weight[q - 1]
        offsets = (offsets[:, None] + arc[None, :]).ravel()
    R = np.repeat(rows, len(offsets))
    C = (base[:, None] + offsets[None, :]).ravel()
    return R, C


def _dense(field: Ring, N: int) -> np.ndarray:
    return np.zeros((N, N), dtype=np.int64 if isinstance(field, PrimeField) else object)


def act_diagram(D: BrauerDiagram, m: int, field: Ring = QQ) -> ExactMatrix:
    space = TensorSpace(m, D.n, field)
    A = _dense(field, space.dim)
    R, C = diagram_entries(D, m)
    A[R, C] = 1
    return ExactMatrix(field, A)


def act_generator(kind: str, j: int, m: int, n: int, field: Ring = QQ) -> ExactMatrix:
    """Matrix of ``s_j`` (kind ``"s"``) or ``e_j`` (kind ``"e"``)."""
    if kind not in ("s", "e"):
        raise ValueError(f"unknown generator kind {kind!r}")
    D = generator_s(j, n) if kind == "s" else generator_e(j, n)
    return act_diagram(D, m, field)


def _to_field(c, field: Ring, m: int):
    if isinstance(c, IntPoly):
        c = c(m)
    if isinstance(c, Mod):
        if not isinstance(field, PrimeField) or c.p != field.p:
            raise RingMismatchError(f"{c!r} does not live in {field!r}")
        return c
    if isinstance(field, PrimeField) and hasattr(c, "denominator") and c.denominator != 1:
        return field(c.numerator) * field(c.denominator).inverse()
    return field(c if not hasattr(c, "denominator") or c.denominator != 1 else int(c))


def act_element(h: AlgebraElement, m: int, field: Ring = QQ) -> ExactMatrix:
    """Linear extension of :func:`act_diagram`; ``h.delta`` must map to ``m``."""
    if _to_field(h.delta, field, m) != field(m):
        raise ValueError(f"element has delta = {h.delta}, which is not {m} in {field!r}")
    space = TensorSpace(m, h.n, field)
    A = _dense(field, space.dim)
    for D, c in h.terms.items():
        R, C = diagram_entries(D, m)
        cv = _to_field(c, field, m)
        if isinstance(field, PrimeField):
            A[R, C] = (A[R, C] + cv.value) % field.p
        else:
            A[R, C] = A[R, C] + cv
    return ExactMatrix(field, A)


def _phi_guard(m: int, n: int, large: bool) -> None:
    cols = m ** (2 * n)
    if cols > MAX_PHI_COLUMNS and not large:
        raise GuardError(f"m^(2n) = {cols} columns exceeds {MAX_PHI_COLUMNS}; pass large=True (--large on the command line)")


def phi_matrix(m: int, n: int, field: Ring = QQ, large: bool = False) -> ExactMatrix:
    """Rows are the flattened action matrices of the diagrams, in frozen order."""
    _phi_guard(m, n, large)
    basis = diagram_basis(n)
    N = m ** n
    P = np.zeros((len(basis), N * N), dtype=np.int64 if isinstance(field, PrimeField) else object)
    for r, D in enumerate(basis.diagrams):
        R, C = diagram_entries(D, m)
        P[r, R * N + C] = 1
    return ExactMatrix(field, P)


def phi_columns(m: int, n: int, large: bool = False) -> np.ndarray:
    """The distinct nonzero columns of :func:`phi_matrix` as 0/1 rows.

    ``v phi = 0`` exactly when ``v`` is orthogonal to each of these rows, so
    they determine the kernel without materialising the full matrix.
    """
    _phi_guard(m, n, large)
    basis = diagram_basis(n)
    N = m ** n
    flats, owners = [], []
    for r, D in enumerate(basis.diagrams):
        R, C = diagram_entries(D, m)
        flats.append(R * N + C)
        owners.append(np.full(len(R), r, dtype=np.int64))
    flat = np.concatenate(flats)
    owner = np.concatenate(owners)
    used, col_id = np.unique(flat, return_inverse=True)
    cols = np.zeros((len(used), len(basis)), dtype=np.int8)
    cols[col_id, owner] = 1
    return np.unique(cols, axis=0).astype(np.int64)


def kernel(m: int, n: int, field: Ring = QQ, large: bool = False) -> SpanBasis:
    """Coordinates, in the diagram basis, of the kernel of phi."""
    _require_odd(field)
    if not field.is_field:
        raise UnsupportedRingError(f"kernel needs a field, got {field!r}")
    cols = phi_columns(m, n, large)
    image = SpanBasis(len(diagram_basis(n)), field)
    if isinstance(field, PrimeField):
        image.insert_many(cols)
    else:
        image.insert_many(cols.astype(object))
    return image.complement()


def element_vector(h: AlgebraElement, field: Ring | None = None, m: int | None = None) -> list:
    """Coordinates of ``h`` in the frozen diagram basis (coefficients mapped into ``field``)."""
    basis = diagram_basis(h.n)
    field = field or h.ring
    v = [field.zero] * len(basis)
    for D, c in h.terms.items():
        v[basis.index[D]] = _to_field(c, field, m) if m is not None else field(c)
    return v
