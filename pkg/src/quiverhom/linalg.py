"""Dense linear algebra over a prime field F_p.

Matrices are plain numpy int64 arrays with entries in [0, p).  The free
functions below are the workhorses; :class:`FpMatrix` wraps an array together
with its modulus for callers that want to carry the field around.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "FpMatrix",
    "NoSolution",
    "is_prime",
    "as_fp",
    "rref",
    "rank",
    "kernel",
    "left_kernel",
    "solve",
    "inverse",
    "column_space",
    "complement_columns",
    "intersect_columns",
    "in_span",
    "random_matrix",
]


class NoSolution(ArithmeticError):
    """Raised by :meth:`FpMatrix.solve` when the system is inconsistent."""


@lru_cache(maxsize=64)
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


def as_fp(a, p: int, shape=None) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    if shape is not None:
        arr = arr.reshape(shape)
    return arr % p


def _inv(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns."""
    r = np.array(a, dtype=np.int64) % p
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        lead = int(r[row, col])
        if lead != 1:
            r[row, col:] = (r[row, col:] * _inv(lead, p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        others = np.flatnonzero(factors)
        if others.size:
            r[others, col:] = (r[others, col:] - np.outer(factors[others], r[row, col:])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the right null space of ``a``."""
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(a, p)
    pset = set(pivots)
    free = [c for c in range(ncols) if c not in pset]
    k = np.zeros((ncols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        k[f, j] = 1
        for i, pc in enumerate(pivots):
            k[pc, j] = (-r[i, f]) % p
    return k


def left_kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of {y : y a = 0}."""
    return kernel(np.asarray(a).T, p).T


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Some X with a X = b, or None if b is not in the column span of a."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    n = a.shape[1]
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    if a.shape[0] == 0:
        return x[:, 0] if vector else x
    r, pivots = rref(np.hstack([a, b]), p)
    if pivots and pivots[-1] >= n:
        return None
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x[:, 0] if vector else x


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return a.copy()
    r, pivots = rref(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return r[:, n:]


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """A basis of the column span (a subset of the columns of ``a``)."""
    a = np.asarray(a, dtype=np.int64) % p
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    _, pivots = rref(a, p)
    return a[:, pivots]


def complement_columns(basis: np.ndarray, n: int, p: int) -> np.ndarray:
    """Standard unit vectors completing the columns of ``basis`` to F_p^n."""
    basis = np.asarray(basis, dtype=np.int64)
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    basis = basis.reshape(n, -1)
    _, pivots = rref(np.hstack([basis, np.eye(n, dtype=np.int64)]), p)
    k = basis.shape[1]
    picks = [c - k for c in pivots if c >= k]
    return np.eye(n, dtype=np.int64)[:, picks]


def intersect_columns(u: np.ndarray, w: np.ndarray, p: int) -> np.ndarray:
    """Basis of span(u) ∩ span(w) for column bases u, w."""
    n = u.shape[0]
    if u.shape[1] == 0 or w.shape[1] == 0:
        return np.zeros((n, 0), dtype=np.int64)
    k = kernel(np.hstack([u, -w % p]), p)
    return column_space((u @ k[: u.shape[1]]) % p, p)


def in_span(basis: np.ndarray, v: np.ndarray, p: int) -> bool:
    return solve(basis, v, p) is not None


def random_matrix(rng: np.random.Generator, rows: int, cols: int, p: int) -> np.ndarray:
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)


class FpMatrix:
    """An immutable matrix over F_p."""

    __slots__ = ("p", "a")

    def __init__(self, entries, p: int, shape: tuple[int, int] | None = None):
        if not is_prime(int(p)):
            raise ValueError(f"{p} is not prime")
        arr = as_fp(entries, p, shape)
        if arr.ndim != 2:
            arr = arr.reshape(shape if shape is not None else (arr.shape[0], -1))
        arr.setflags(write=False)
        self.p = int(p)
        self.a = arr

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> FpMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def T(self) -> FpMatrix:
        return FpMatrix(self.a.T, self.p)

    def _check(self, other: FpMatrix) -> None:
        if other.p != self.p:
            raise ValueError("field mismatch")

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        return FpMatrix(self.a @ other.a, self.p)

    def __add__(self, other: FpMatrix) -> FpMatrix:
        self._check(other)
        return FpMatrix(self.a + other.a, self.p)

    def __sub__(self, other: FpMatrix) -> FpMatrix:
        self._check(other)
        return FpMatrix(self.a - other.a, self.p)

    def __neg__(self) -> FpMatrix:
        return FpMatrix(-self.a, self.p)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.shape == other.shape and bool(np.array_equal(self.a, other.a)))

    def __hash__(self):
        return hash((self.p, self.shape, self.a.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.a.tolist()})"

    def hstack(self, other: FpMatrix) -> FpMatrix:
        self._check(other)
        return FpMatrix(np.hstack([self.a, other.a]), self.p)

    def vstack(self, other: FpMatrix) -> FpMatrix:
        self._check(other)
        return FpMatrix(np.vstack([self.a, other.a]), self.p)

    def rref(self) -> tuple[FpMatrix, int, list[int]]:
        r, pivots = rref(self.a, self.p)
        return FpMatrix(r, self.p), len(pivots), pivots

    def rank(self) -> int:
        return rank(self.a, self.p)

    def kernel_basis(self) -> FpMatrix:
        return FpMatrix(kernel(self.a, self.p), self.p)

    def solve(self, b: FpMatrix) -> FpMatrix:
        self._check(b)
        if self.rows != b.rows:
            raise ValueError(f"row mismatch: {self.shape} vs {b.shape}")
        x = solve(self.a, b.a, self.p)
        if x is None:
            raise NoSolution("right-hand side is not in the column span")
        return FpMatrix(x, self.p)

    def inverse(self) -> FpMatrix:
        return FpMatrix(inverse(self.a, self.p), self.p)
