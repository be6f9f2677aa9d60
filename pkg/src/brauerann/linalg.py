"""Dense exact linear algebra over Q and GF(p).

Rows are the unit of work everywhere: matrices are families of row vectors,
``rref`` returns the reduced row-echelon span of the rows and ``nullspace``
is the *left* nullspace ``{v : v M = 0}``.

Two backends share one algorithm.  GF(p) works in ``int64`` residues.  Q
works fraction-free in Python integers held in ``object`` arrays: a
:class:`SpanBasis` over Q stores integer rows ``B`` with one common
denominator ``D`` so that ``B / D`` is exactly the reduced echelon form and
``gcd(B, D) == 1``.  That representation is canonical, which makes basis
equality a plain comparison.

Pivoting is deterministic: columns are scanned left to right and the first
unprocessed row with a nonzero entry becomes the pivot row.
"""
from __future__ import annotations

import hashlib
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .rings import QQ, Mod, PrimeField, RationalField, Ring, UnsupportedRingError

_CHUNK = 4096


def _require_field(field: Ring) -> None:
    if not isinstance(field, (RationalField, PrimeField)):
        raise UnsupportedRingError(f"linear algebra needs Q or GF(p), got {field!r}")


class _PrimeOps:
    def __init__(self, p: int):
        self.p = p
        self.dtype = np.int64

    def coerce(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        flat = a.ravel()
        for k, x in enumerate(flat):
            if isinstance(x, Mod):
                if x.p != self.p:
                    raise ValueError(f"GF({x.p}) entry in a GF({self.p}) computation")
                flat[k] = x.value
            elif isinstance(x, Fraction) or not isinstance(x, (int, np.integer)):
                raise ValueError(f"{x!r} is not a GF({self.p}) entry")
        return (a % self.p).astype(np.int64)

    def normalize(self, W: np.ndarray) -> np.ndarray:
        return W % self.p

    def echelon(self, W: np.ndarray):
        p = self.p
        W = W % p
        k, n = W.shape
        r = 0
        pivots: list[int] = []
        for c in range(n):
            if r == k:
                break
            nz = np.flatnonzero(W[r:, c])
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                W[[r, i]] = W[[i, r]]
            inv = pow(int(W[r, c]), -1, p)
            W[r] = (W[r] * inv) % p
            col = W[:, c].copy()
            col[r] = 0
            mask = col != 0
            if mask.any():
                W[mask] = (W[mask] - np.outer(col[mask], W[r])) % p
            pivots.append(c)
            r += 1
        return W[:r].copy(), pivots, 1

    def reduce(self, W: np.ndarray, B: np.ndarray, piv: list[int], D: int) -> np.ndarray:
        if not piv:
            return W % self.p
        return (W - (W[:, piv] @ B) % self.p) % self.p

    def merge(self, B, D, piv, N, D2, newpiv):
        p = self.p
        if B.shape[0]:
            B = (B - (B[:, newpiv] @ N) % p) % p
        return np.vstack([B, N]), 1

    def scalar(self, value: int, D: int) -> Mod:
        return Mod(int(value), self.p)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)


def _content(rows: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(rows, axis=1) if rows.shape[1] else np.zeros(rows.shape[0], dtype=object)
    g = np.array([int(x) if x else 1 for x in g], dtype=object)
    return g


class _RationalOps:
    def __init__(self):
        self.dtype = object

    def coerce(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        out = np.empty(a.shape, dtype=object)
        for i in range(a.shape[0]):
            row = a[i]
            den = 1
            for x in row:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        den = den * x.denominator // math.gcd(den, x.denominator)
                elif isinstance(x, Mod) or not isinstance(x, (int, np.integer)):
                    raise ValueError(f"{x!r} is not a rational entry")
            for j, x in enumerate(row):
                if isinstance(x, np.integer):
                    out[i, j] = int(x) * den
                elif isinstance(x, Fraction):
                    out[i, j] = x.numerator * (den // x.denominator)
                else:
                    out[i, j] = x * den
        return out

    def normalize(self, W: np.ndarray) -> np.ndarray:
        if W.shape[0] == 0:
            return W
        return W // _content(W)[:, None]

    def echelon(self, W: np.ndarray):
        W = W.copy()
        k, n = W.shape
        r = 0
        pivots: list[int] = []
        for c in range(n):
            if r == k:
                break
            colv = W[r:, c]
            nz = [i for i, x in enumerate(colv) if x != 0]
            if not nz:
                continue
            i = r + nz[0]
            if i != r:
                W[[r, i]] = W[[i, r]]
            if W[r, c] < 0:
                W[r] = -W[r]
            W[r] = W[r] // _content(W[r:r + 1])[0]
            pv = W[r, c]
            col = W[:, c].copy()
            col[r] = 0
            mask = np.array([x != 0 for x in col], dtype=bool)
            if mask.any():
                sub = W[mask] * pv - np.outer(col[mask], W[r])
                W[mask] = sub // _content(sub)[:, None]
            pivots.append(c)
            r += 1
        W = W[:r]
        D = 1
        for i, c in enumerate(pivots):
            pv = W[i, c]
            D = D * pv // math.gcd(D, pv)
        for i, c in enumerate(pivots):
            W[i] = W[i] * (D // W[i, c])
        return W, pivots, D

    def reduce(self, W, B, piv, D):
        if not piv:
            return self.normalize(W.copy())
        R = W * D - W[:, piv].dot(B)
        return self.normalize(R)

    def merge(self, B, D, piv, N, D2, newpiv):
        if B.shape[0]:
            B = B * D2 - B[:, newpiv].dot(N)
            N = N * D
            D = D * D2
        else:
            D = D2
        M = np.vstack([B, N])
        g = int(np.gcd.reduce(M.ravel())) if M.size else 1
        g = math.gcd(g, D)
        if g > 1:
            M = M // g
            D //= g
        return M, D

    def scalar(self, value, D):
        return Fraction(int(value), int(D))

    def zeros(self, shape):
        return np.zeros(shape, dtype=object)


def _ops_for(field: Ring):
    _require_field(field)
    if isinstance(field, PrimeField):
        return _PrimeOps(field.p)
    return _RationalOps()


class ExactMatrix:
    """A dense matrix over one coefficient ring.

    ``data`` is an ``int64`` array of residues for GF(p) and an ``object``
    array of ints/Fractions for Q and Z.  Indexing returns ring elements.
    """

    def __init__(self, field: Ring, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError("ExactMatrix data must be two-dimensional")
        self.field = field
        self.data = data

    @classmethod
    def from_rows(cls, field: Ring, rows: Sequence[Sequence], ncols: int | None = None) -> "ExactMatrix":
        rows = list(rows)
        if not rows:
            return cls(field, np.zeros((0, ncols or 0), dtype=object))
        if isinstance(field, PrimeField):
            data = _PrimeOps(field.p).coerce(rows)
        else:
            data = np.empty((len(rows), len(rows[0])), dtype=object)
            for i, row in enumerate(rows):
                if len(row) != data.shape[1]:
                    raise ValueError("ragged rows")
                for j, x in enumerate(row):
                    data[i, j] = field(x)
        if ncols is not None and data.shape[1] != ncols:
            raise ValueError("column count mismatch")
        return cls(field, data)

    @classmethod
    def identity(cls, field: Ring, n: int) -> "ExactMatrix":
        if isinstance(field, PrimeField):
            return cls(field, np.eye(n, dtype=np.int64))
        d = np.zeros((n, n), dtype=object)
        for i in range(n):
            d[i, i] = 1
        return cls(field, d)

    @classmethod
    def zeros(cls, field: Ring, nrows: int, ncols: int) -> "ExactMatrix":
        dtype = np.int64 if isinstance(field, PrimeField) else object
        d = np.zeros((nrows, ncols), dtype=dtype)
        return cls(field, d)

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, idx):
        i, j = idx
        return self.field(int(self.data[i, j]) if isinstance(self.field, PrimeField) else self.data[i, j])

    def row(self, i: int) -> list:
        return [self[i, j] for j in range(self.ncols)]

    def tolist(self) -> list[list]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.data.T.copy())

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ValueError("matrices over different rings")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if isinstance(self.field, PrimeField):
            return ExactMatrix(self.field, (self.data @ other.data) % self.field.p)
        return ExactMatrix(self.field, self.data.dot(other.data))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field or self.shape != other.shape:
            raise ValueError("incompatible matrices")
        d = self.data + other.data
        if isinstance(self.field, PrimeField):
            d %= self.field.p
        return ExactMatrix(self.field, d)

    def scale(self, c) -> "ExactMatrix":
        if isinstance(self.field, PrimeField):
            c = Mod(c, self.field.p).value if not isinstance(c, Mod) else c.value
            return ExactMatrix(self.field, (self.data * c) % self.field.p)
        return ExactMatrix(self.field, self.data * self.field(c))

    def is_zero(self) -> bool:
        return not any(x != 0 for x in self.data.flat)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and all(a == b for a, b in zip(self.data.flat, other.data.flat)))

    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols}"]
        for i in range(self.nrows):
            lines.append(" ".join(str(self[i, j]) for j in range(self.ncols)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, field: Ring, text: str) -> "ExactMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        r, c = map(int, lines[0].split())
        body = [[field.parse(tok) for tok in ln.split()] for ln in lines[1:]]
        if len(body) != r or any(len(row) != c for row in body):
            raise ValueError("matrix text does not match its header")
        return cls.from_rows(field, body, ncols=c) if r else cls.zeros(field, 0, c)

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {self.nrows}x{self.ncols})"


class SpanBasis:
    """Reduced row-echelon basis of a subspace of ``field^dim``.

    Rows have strictly increasing pivots, pivot entries 1, and every pivot
    column is zero in the other rows.  :meth:`insert` leaves the basis
    untouched when the vector is already in the span.
    """

    def __init__(self, dim: int, field: Ring = QQ):
        self._ops = _ops_for(field)
        self.field = field
        self.dim = dim
        self._B = self._ops.zeros((0, dim))
        self._D = 1
        self._piv: list[int] = []

    @classmethod
    def from_rows(cls, field: Ring, rows, dim: int | None = None) -> "SpanBasis":
        if isinstance(rows, ExactMatrix):
            dim = rows.ncols
        elif dim is None:
            rows = list(rows)
            if not rows:
                raise ValueError("dim is required for an empty row family")
            dim = len(rows[0])
        sb = cls(dim, field)
        sb.insert_many(rows)
        return sb

    @property
    def rank(self) -> int:
        return len(self._piv)

    def __len__(self) -> int:
        return self.rank

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._piv)

    def _work(self, rows) -> np.ndarray:
        if isinstance(rows, ExactMatrix):
            if rows.field != self.field:
                raise ValueError(f"{rows.field!r} matrix given to a {self.field!r} basis")
            W = rows.data
            if isinstance(self.field, PrimeField):
                W = W.astype(np.int64) % self.field.p
            else:
                W = self._ops.coerce(W)
        elif isinstance(rows, np.ndarray) and rows.dtype != object and isinstance(self.field, PrimeField):
            W = rows.astype(np.int64) % self.field.p
            if W.ndim == 1:
                W = W.reshape(1, -1)
        else:
            rows = rows if isinstance(rows, np.ndarray) else list(rows)
            if len(rows) == 0:
                return self._ops.zeros((0, self.dim))
            W = self._ops.coerce(rows)
        if W.shape[1] != self.dim:
            raise ValueError(f"vector length {W.shape[1]} does not match ambient dimension {self.dim}")
        return W

    def _residual(self, W: np.ndarray) -> np.ndarray:
        return self._ops.reduce(W, self._B, self._piv, self._D)

    def insert_many(self, rows) -> int:
        """Insert a family of vectors; returns how many raised the rank."""
        before = self.rank
        self.absorb(rows)
        return self.rank - before

    def absorb(self, rows) -> np.ndarray:
        """Insert ``rows`` and return backend rows spanning the new directions.

        The returned rows (integers over Q, residues over GF(p)) together with
        the old basis span the same space as the old basis plus ``rows``.
        """
        W = self._work(rows)
        fresh = []
        for start in range(0, W.shape[0], _CHUNK):
            if self.rank == self.dim:
                break
            R = self._residual(W[start:start + _CHUNK])
            keep = (R != 0).any(axis=1)
            R = R[keep]
            if R.shape[0] == 0:
                continue
            N, newpiv, D2 = self._ops.echelon(R)
            fresh.append(N)
            B, D = self._ops.merge(self._B, self._D, self._piv, N, D2, newpiv)
            piv = self._piv + newpiv
            order = np.argsort(piv, kind="stable")
            self._B = B[order]
            self._piv = [piv[i] for i in order]
            self._D = D
        if not fresh:
            return self._ops.zeros((0, self.dim))
        return np.vstack(fresh)

    def insert(self, v: Sequence) -> bool:
        return self.insert_many([list(v)] if not isinstance(v, np.ndarray) else v.reshape(1, -1)) == 1

    def contains(self, v) -> bool:
        W = self._work([list(v)] if not isinstance(v, np.ndarray) else v.reshape(1, -1))
        return not (self._residual(W) != 0).any()

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def contains_all(self, rows) -> bool:
        W = self._work(rows)
        for start in range(0, W.shape[0], _CHUNK):
            R = self._residual(W[start:start + _CHUNK])
            if (R != 0).any():
                return False
        return True

    def issubspace(self, other: "SpanBasis") -> bool:
        self._check_compatible(other)
        return other.contains_all(self._B) if self.rank else True

    def _check_compatible(self, other: "SpanBasis") -> None:
        if self.field != other.field or self.dim != other.dim:
            raise ValueError("span bases live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, SpanBasis):
            return NotImplemented
        if self.field != other.field or self.dim != other.dim:
            return False
        return (self._piv == other._piv and self._D == other._D
                and all(a == b for a, b in zip(self._B.flat, other._B.flat)))

    def rows(self) -> list[tuple]:
        D = self._D
        return [tuple(self._ops.scalar(x, D) for x in row) for row in self._B]

    def row_array(self) -> np.ndarray:
        """Stored rows in backend form (integers; divide by :attr:`denominator` over Q)."""
        return self._B.copy()

    @property
    def denominator(self) -> int:
        return self._D

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.field, self.rows(), ncols=self.dim) if self.rank \
            else ExactMatrix.zeros(self.field, 0, self.dim)

    def complement(self) -> "SpanBasis":
        """Basis of ``{x : r . x = 0 for every stored row r}``."""
        piv = set(self._piv)
        free = [j for j in range(self.dim) if j not in piv]
        out = SpanBasis(self.dim, self.field)
        if not free:
            return out
        X = self._ops.zeros((len(free), self.dim))
        for k, f in enumerate(free):
            X[k, f] = self._D
            for i, c in enumerate(self._piv):
                X[k, c] = -self._B[i, f]
        out.insert_many(X)
        return out

    def copy(self) -> "SpanBasis":
        sb = SpanBasis(self.dim, self.field)
        sb._B = self._B.copy()
        sb._D = self._D
        sb._piv = list(self._piv)
        return sb

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.field!r}|{self.dim}|{self._D}|".encode())
        for c, row in zip(self._piv, self._B):
            h.update(f"{c}:".encode())
            h.update(",".join(str(int(x)) for x in row).encode())
            h.update(b";")
        return h.hexdigest()

    def __repr__(self):
        return f"SpanBasis({self.field!r}, dim={self.dim}, rank={self.rank})"


def rref(M: ExactMatrix) -> tuple[int, SpanBasis]:
    """Row rank and reduced row-echelon span of the rows of ``M``."""
    _require_field(M.field)
    sb = SpanBasis(M.ncols, M.field)
    sb.insert_many(M)
    return sb.rank, sb


def nullspace(M: ExactMatrix) -> SpanBasis:
    """Basis of the left nullspace ``{v : v M = 0}``; dimension ``rows - rank``."""
    _require_field(M.field)
    colspace = SpanBasis(M.nrows, M.field)
    colspace.insert_many(M.transpose())
    return colspace.complement()


def span_insert(B: SpanBasis, v: Iterable) -> bool:
    return B.insert(list(v))
