"""Modules over a path algebra, realised as quiver representations.

A module M has a vector space M_v at each vertex and, for an arrow a: v -> w,
a matrix of shape (dim M_w, dim M_v).  A path acts by the product of its arrow
matrices, first arrow rightmost.  Maps are families of per-vertex matrices.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np
from sympy import ZZ
from sympy.polys.galoistools import gf_factor

from . import linalg as la
from .algebra import PathAlgebra

__all__ = [
    "Module",
    "ModuleMap",
    "ShortExactSequence",
    "ModuleError",
    "EnumerationInfeasible",
    "settings",
    "zero_module",
    "free_module",
    "free_map",
    "map_elements",
    "standard_module",
    "regular_module",
    "hom_basis",
    "hom_dim",
    "kernel",
    "image",
    "cokernel",
    "map_factorization",
    "direct_sum",
    "dualize",
    "dualize_map",
    "is_isomorphic",
    "decompose",
    "submodules",
    "submodule",
    "quotient",
    "generated_submodule",
    "radical",
    "socle",
    "top_dims",
    "random_endomorphism",
    "random_map",
    "random_module",
    "base_change",
    "lift_free",
    "factor_through_mono",
    "factor_through_epi",
    "pullback",
    "pushout",
    "free_block_map",
    "summand_projection",
    "summand_inclusion",
]


class ModuleError(ValueError):
    pass


class EnumerationInfeasible(RuntimeError):
    """An enumeration would exceed its configured budget."""


@dataclass
class _Settings:
    seed: int = 0
    iso_trials: int = 64
    exhaustive_limit: int = 4096
    submodule_budget: int = 20000


settings = _Settings()


def _rng_for(*objs) -> np.random.Generator:
    """A generator seeded by the global seed and the data of ``objs``.

    Seeding from the data keeps randomized searches reproducible regardless
    of the order in which they are called.
    """
    h = settings.seed & 0xFFFFFFFF
    for o in objs:
        if isinstance(o, Module):
            h = zlib.crc32(repr(o.dims).encode(), h)
            for m in o.mats:
                h = zlib.crc32(m.tobytes(), h)
        else:
            h = zlib.crc32(repr(o).encode(), h)
    return np.random.default_rng(h)


class Module:
    """A finite-dimensional representation of the quiver of ``algebra``."""

    def __init__(self, algebra: PathAlgebra, dims: Sequence[int], mats: Sequence | None = None,
                 check: bool = True):
        self.algebra = algebra
        p = algebra.p
        arrows = algebra.quiver.arrows
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n:
            raise ModuleError("dimension vector has wrong length")
        if mats is None:
            mats = [None] * len(arrows)
        if len(mats) != len(arrows):
            raise ModuleError("need one matrix per arrow")
        self.mats = []
        for a, m in zip(arrows, mats):
            shape = (self.dims[a.tgt], self.dims[a.src])
            if m is None:
                m = np.zeros(shape, dtype=np.int64)
            m = np.array(m, dtype=np.int64).reshape(shape) % p
            m.setflags(write=False)
            self.mats.append(m)
        self.offsets = np.concatenate([[0], np.cumsum(self.dims)]).astype(int)
        self._cache: dict = {}
        if check:
            for rel in algebra.relations:
                acc = None
                for path, c in rel.items():
                    term = c * self.path_matrix(path)
                    acc = term if acc is None else acc + term
                if acc is not None and np.any(acc % p):
                    raise ModuleError("a relation does not act as zero")

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return int(sum(self.dims))

    def is_zero(self) -> bool:
        return self.dim == 0

    def path_matrix(self, arrows: Sequence[int], start: int | None = None) -> np.ndarray:
        """Matrix by which the path (arrow indices, first arrow first) acts."""
        q = self.algebra.quiver
        if not arrows:
            return np.eye(self.dims[start], dtype=np.int64)
        m = np.eye(self.dims[q.arrows[arrows[0]].src], dtype=np.int64)
        for a in arrows:
            m = (self.mats[a] @ m) % self.p
        return m

    def action(self, b: int) -> np.ndarray:
        """Matrix of basis element ``b`` of the algebra, from M_src(b) to M_tgt(b)."""
        key = ("act", b)
        if key not in self._cache:
            s, arrows = self.algebra.basis[b]
            self._cache[key] = self.path_matrix(arrows, s)
        return self._cache[key]

    def block(self, v: int) -> slice:
        return slice(self.offsets[v], self.offsets[v + 1])

    def full_arrow(self, a: int) -> np.ndarray:
        """The arrow matrix embedded in dim M x dim M."""
        arrow = self.algebra.quiver.arrows[a]
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        out[self.block(arrow.tgt), self.block(arrow.src)] = self.mats[a]
        return out

    def identity(self) -> ModuleMap:
        return ModuleMap(self, self, [np.eye(d, dtype=np.int64) for d in self.dims], check=False)

    def zero_map(self, other: Module) -> ModuleMap:
        return ModuleMap(self, other, [np.zeros((e, d), dtype=np.int64)
                                       for d, e in zip(self.dims, other.dims)], check=False)

    def key(self) -> bytes:
        return repr(self.dims).encode() + b"".join(m.tobytes() for m in self.mats)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Module) and other.algebra is self.algebra
                and self.dims == other.dims
                and all(np.array_equal(x, y) for x, y in zip(self.mats, other.mats)))

    def __hash__(self):
        return hash(self.key())

    def __repr__(self) -> str:
        dv = "".join(str(d) for d in self.dims) if max(self.dims, default=0) < 10 else self.dims
        name = getattr(self, "name", None)
        return f"Module({name or dv}, dim={self.dim})"


class ModuleMap:
    """A homomorphism given by one matrix per vertex."""

    def __init__(self, src: Module, tgt: Module, mats: Sequence, check: bool = True):
        if src.algebra is not tgt.algebra:
            raise ModuleError("maps between modules over different algebras")
        self.src = src
        self.tgt = tgt
        p = src.p
        self.mats = []
        for v in range(src.algebra.n):
            m = np.array(mats[v], dtype=np.int64).reshape(tgt.dims[v], src.dims[v]) % p
            m.setflags(write=False)
            self.mats.append(m)
        if check and not self.is_homomorphism():
            raise ModuleError("matrices do not commute with the arrows")

    @property
    def p(self) -> int:
        return self.src.p

    def is_homomorphism(self) -> bool:
        for a, arrow in enumerate(self.src.algebra.quiver.arrows):
            lhs = self.mats[arrow.tgt] @ self.src.mats[a]
            rhs = self.tgt.mats[a] @ self.mats[arrow.src]
            if np.any((lhs - rhs) % self.p):
                return False
        return True

    def full(self) -> np.ndarray:
        out = np.zeros((self.tgt.dim, self.src.dim), dtype=np.int64)
        for v, m in enumerate(self.mats):
            out[self.tgt.block(v), self.src.block(v)] = m
        return out

    @classmethod
    def from_full(cls, src: Module, tgt: Module, big: np.ndarray, check: bool = True) -> ModuleMap:
        return cls(src, tgt, [big[tgt.block(v), src.block(v)] for v in range(src.algebra.n)], check)

    def __matmul__(self, other: ModuleMap) -> ModuleMap:
        """Ordinary composition: (g @ f)(x) = g(f(x))."""
        if other.tgt is not self.src and other.tgt.dims != self.src.dims:
            raise ModuleError("maps do not compose")
        return ModuleMap(other.src, self.tgt,
                         [(g @ f) % self.p for g, f in zip(self.mats, other.mats)], check=False)

    def then(self, other: ModuleMap) -> ModuleMap:
        return other @ self

    def __add__(self, other: ModuleMap) -> ModuleMap:
        return ModuleMap(self.src, self.tgt, [(a + b) for a, b in zip(self.mats, other.mats)], check=False)

    def __sub__(self, other: ModuleMap) -> ModuleMap:
        return ModuleMap(self.src, self.tgt, [(a - b) for a, b in zip(self.mats, other.mats)], check=False)

    def scale(self, c: int) -> ModuleMap:
        return ModuleMap(self.src, self.tgt, [c * a for a in self.mats], check=False)

    def rank(self) -> int:
        return sum(la.rank(m, self.p) for m in self.mats)

    def is_zero(self) -> bool:
        return all(not np.any(m) for m in self.mats)

    def is_injective(self) -> bool:
        return self.rank() == self.src.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.tgt.dim

    def is_iso(self) -> bool:
        return self.src.dims == self.tgt.dims and self.is_injective()

    def inverse(self) -> ModuleMap:
        return ModuleMap(self.tgt, self.src, [la.inverse(m, self.p) for m in self.mats], check=False)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModuleMap) and self.src.dims == other.src.dims
                and self.tgt.dims == other.tgt.dims
                and all(np.array_equal(a, b) for a, b in zip(self.mats, other.mats)))

    def __repr__(self) -> str:
        return f"ModuleMap({self.src!r} -> {self.tgt!r}, rank={self.rank()})"


@dataclass
class ShortExactSequence:
    """0 -> A -i-> B -q-> C -> 0."""

    i: ModuleMap
    q: ModuleMap
    note: str = ""

    @property
    def A(self) -> Module:
        return self.i.src

    @property
    def B(self) -> Module:
        return self.i.tgt

    @property
    def C(self) -> Module:
        return self.q.tgt

    def check(self) -> bool:
        return is_exact_sequence(self.i, self.q) and self.i.is_injective() and self.q.is_surjective()

    def certify(self) -> None:
        if not self.check():
            raise ModuleError(f"sequence is not short exact {self.note}".strip())


def is_exact_at(f: ModuleMap, g: ModuleMap) -> bool:
    """Im f = Ker g for f: X -> Y, g: Y -> Z."""
    p = f.p
    for v in range(f.src.algebra.n):
        if np.any((g.mats[v] @ f.mats[v]) % p):
            return False
        if la.rank(f.mats[v], p) + la.rank(g.mats[v], p) != f.tgt.dims[v]:
            return False
    return True


is_exact_sequence = is_exact_at


# ---------------------------------------------------------------------------
# construction of standard modules


def zero_module(A: PathAlgebra) -> Module:
    return Module(A, [0] * A.n, check=False)


def free_module(A: PathAlgebra, gens: Sequence[int]) -> Module:
    """The projective module ⊕_g P(gens[g]).

    The basis at vertex u lists, generator by generator, the algebra basis
    paths from gens[g] to u in increasing index order.
    """
    gens = tuple(int(g) for g in gens)
    key = ("free", gens)
    if key in A._cache:
        return A._cache[key]
    dims = [sum(len(A.between(g, u)) for g in gens) for u in range(A.n)]
    mats = []
    for ai, arrow in enumerate(A.quiver.arrows):
        u, w = arrow.src, arrow.tgt
        m = np.zeros((dims[w], dims[u]), dtype=np.int64)
        ab = A.arrow_basis[ai]
        r0 = c0 = 0
        for g in gens:
            rows = A.between(g, w)
            cols = A.between(g, u)
            if rows and cols:
                m[r0:r0 + len(rows), c0:c0 + len(cols)] = A.table[np.ix_(cols, [ab], rows)][:, 0, :].T
            r0 += len(rows)
            c0 += len(cols)
        mats.append(m)
    M = Module(A, dims, mats, check=False)
    M.gens = gens
    A._cache[key] = M
    return M


def _free_offsets(A: PathAlgebra, gens: Sequence[int], u: int) -> list[int]:
    offs = [0]
    for g in gens:
        offs.append(offs[-1] + len(A.between(g, u)))
    return offs


def free_map(F1: Module, F2: Module, X: Sequence[Sequence[np.ndarray]]) -> ModuleMap:
    """The map F1 -> F2 sending generator i to sum_j X[j][i] in block j.

    X[j][i] is an algebra element (vector over the basis) lying in
    e_{w_j} Λ e_{v_i}; the map is q -> X[j][i] * q on block i.
    """
    A = F1.algebra
    g1, g2 = F1.gens, F2.gens
    mats = []
    for u in range(A.n):
        o1 = _free_offsets(A, g1, u)
        o2 = _free_offsets(A, g2, u)
        m = np.zeros((F2.dims[u], F1.dims[u]), dtype=np.int64)
        for i, vi in enumerate(g1):
            qs = A.between(vi, u)
            if not qs:
                continue
            for j, wj in enumerate(g2):
                x = X[j][i]
                if not np.any(x):
                    continue
                rows = A.between(wj, u)
                if not rows:
                    continue
                # products x * q for each q, restricted to paths wj -> u
                prod = np.tensordot(x, A.table[:, qs, :][:, :, rows], axes=(0, 0)) % A.p
                m[o2[j]:o2[j + 1], o1[i]:o1[i + 1]] = prod.T
        mats.append(m)
    return ModuleMap(F1, F2, mats, check=False)


def map_elements(f: ModuleMap) -> list[list[np.ndarray]]:
    """Inverse of :func:`free_map` for a map out of a free module.

    Returns X with X[j][i] the block-j component of the image of generator i
    (zero blocks when the target is not free are not supported).
    """
    F1, F2 = f.src, f.tgt
    A = F1.algebra
    X = [[np.zeros(A.dim, dtype=np.int64) for _ in F1.gens] for _ in F2.gens]
    for i, vi in enumerate(F1.gens):
        o1 = _free_offsets(A, F1.gens, vi)
        col = o1[i] + A.between(vi, vi).index(A.idempotents[vi])
        image = f.mats[vi][:, col]
        o2 = _free_offsets(A, F2.gens, vi)
        for j, wj in enumerate(F2.gens):
            rows = A.between(wj, vi)
            X[j][i][rows] = image[o2[j]:o2[j + 1]]
    return X


def generator_image(f: ModuleMap, i: int) -> np.ndarray:
    """Image in f.tgt at vertex gens[i] of the i-th generator of a free module."""
    F = f.src
    A = F.algebra
    v = F.gens[i]
    o = _free_offsets(A, F.gens, v)
    col = o[i] + A.between(v, v).index(A.idempotents[v])
    return f.mats[v][:, col]


def map_from_generators(F: Module, N: Module, images: Sequence[np.ndarray]) -> ModuleMap:
    """The map from a free module sending generator i to images[i] ∈ N_{gens[i]}."""
    A = F.algebra
    mats = [np.zeros((N.dims[u], F.dims[u]), dtype=np.int64) for u in range(A.n)]
    for u in range(A.n):
        o = _free_offsets(A, F.gens, u)
        for i, v in enumerate(F.gens):
            x = np.asarray(images[i], dtype=np.int64).reshape(-1)
            for k, q in enumerate(A.between(v, u)):
                mats[u][:, o[i] + k] = (N.action(q) @ x) % A.p if x.size else 0
    return ModuleMap(F, N, mats, check=False)


def regular_module(A: PathAlgebra) -> Module:
    """Λ as a left module, the free module on all vertices."""
    return free_module(A, list(range(A.n)))


def standard_module(A: PathAlgebra, kind: str, v) -> Module:
    """P(v), E(v) = D(P^op(v)) or S(v)."""
    v = A.vertex(v)
    if kind in ("projective", "P"):
        M = free_module(A, [v])
    elif kind in ("injective", "E", "I"):
        key = ("injective", v)
        if key not in A._cache:
            A._cache[key] = dualize(free_module(A.opposite(), [v]))
        M = A._cache[key]
    elif kind in ("simple", "S"):
        dims = [0] * A.n
        dims[v] = 1
        M = Module(A, dims, check=False)
    else:
        raise ModuleError(f"unknown kind {kind!r}")
    return M


# ---------------------------------------------------------------------------
# Hom


def _hom_system(M: Module, N: Module) -> np.ndarray:
    A = M.algebra
    p = A.p
    sizes = [N.dims[v] * M.dims[v] for v in range(A.n)]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    blocks = []
    for a, arrow in enumerate(A.quiver.arrows):
        v, w = arrow.src, arrow.tgt
        rows = N.dims[w] * M.dims[v]
        if rows == 0:
            continue
        eq = np.zeros((rows, offs[-1]), dtype=np.int64)
        # X_w M_a - N_a X_v = 0 with row-major vectorisation
        if sizes[w]:
            eq[:, offs[w]:offs[w + 1]] += np.kron(np.eye(N.dims[w], dtype=np.int64), M.mats[a].T)
        if sizes[v]:
            eq[:, offs[v]:offs[v + 1]] -= np.kron(N.mats[a], np.eye(M.dims[v], dtype=np.int64))
        blocks.append(eq % p)
    if blocks:
        return np.vstack(blocks), offs
    return np.zeros((0, offs[-1]), dtype=np.int64), offs


def hom_basis(M: Module, N: Module) -> list[ModuleMap]:
    """A basis of Hom(M, N)."""
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    eq, offs = _hom_system(M, N)
    K = la.kernel(eq, M.p)
    out = []
    for c in range(K.shape[1]):
        col = K[:, c]
        mats = [col[offs[v]:offs[v + 1]].reshape(N.dims[v], M.dims[v]) for v in range(M.algebra.n)]
        out.append(ModuleMap(M, N, mats, check=False))
    return out


def hom_dim(M: Module, N: Module) -> int:
    eq, offs = _hom_system(M, N)
    return int(offs[-1]) - la.rank(eq, M.p)


def hom_matrix(M: Module, N: Module) -> np.ndarray:
    """Columns are the flattened (full) maps of a Hom basis."""
    basis = hom_basis(M, N)
    if not basis:
        return np.zeros((N.dim * M.dim, 0), dtype=np.int64)
    return np.stack([f.full().reshape(-1) for f in basis], axis=1)


def combine(basis: Sequence[ModuleMap], coeffs: Sequence[int], M: Module, N: Module) -> ModuleMap:
    mats = [np.zeros((N.dims[v], M.dims[v]), dtype=np.int64) for v in range(M.algebra.n)]
    for c, f in zip(coeffs, basis):
        if c:
            for v in range(M.algebra.n):
                mats[v] = mats[v] + int(c) * f.mats[v]
    return ModuleMap(M, N, mats, check=False)


def random_map(M: Module, N: Module, rng: np.random.Generator | None = None) -> ModuleMap:
    basis = hom_basis(M, N)
    rng = rng or _rng_for(M, N, "map")
    return combine(basis, rng.integers(0, M.p, size=len(basis)), M, N)


def random_endomorphism(M: Module, rng: np.random.Generator | None = None) -> ModuleMap:
    return random_map(M, M, rng)


def random_module(A: PathAlgebra, rng: np.random.Generator, max_gens: int = 3,
                  max_rels: int = 3) -> Module:
    """Cok of a random radical map between small free modules.

    Coefficients are sparse so that the cokernels are spread over many
    isomorphism classes instead of being almost always zero or projective.
    """
    g0 = sorted(int(v) for v in rng.integers(0, A.n, size=int(rng.integers(1, max_gens + 1))))
    g1 = sorted(int(v) for v in rng.integers(0, A.n, size=int(rng.integers(0, max_rels + 1))))
    F0, F1 = free_module(A, g0), free_module(A, g1)
    idem = set(A.idempotents)
    X = [[np.zeros(A.dim, dtype=np.int64) for _ in g1] for _ in g0]
    for j, w in enumerate(g0):
        for i, v in enumerate(g1):
            for b in A.between(w, v):
                if b not in idem and rng.random() < 0.5:
                    X[j][i][b] = rng.integers(1, A.p)
    M, _ = cokernel(free_map(F1, F0, X))
    return M


# ---------------------------------------------------------------------------
# sub and quotient modules


def _cols(s, d: int) -> np.ndarray:
    s = np.asarray(s, dtype=np.int64)
    if s.ndim == 2 and s.shape[0] == d:
        return s
    if s.size == 0:
        return np.zeros((d, 0), dtype=np.int64)
    return s.reshape(d, -1)


def submodule(M: Module, spaces: Sequence[np.ndarray]) -> tuple[Module, ModuleMap]:
    """The submodule with the given per-vertex column bases (assumed closed)."""
    A = M.algebra
    p = A.p
    spaces = [_cols(s, M.dims[v]) % p for v, s in enumerate(spaces)]
    dims = [s.shape[1] for s in spaces]
    mats = []
    for a, arrow in enumerate(A.quiver.arrows):
        v, w = arrow.src, arrow.tgt
        if dims[v] == 0 or dims[w] == 0:
            mats.append(np.zeros((dims[w], dims[v]), dtype=np.int64))
            continue
        x = la.solve(spaces[w], (M.mats[a] @ spaces[v]) % p, p)
        if x is None:
            raise ModuleError("subspaces are not closed under the arrows")
        mats.append(x)
    S = Module(A, dims, mats, check=False)
    return S, ModuleMap(S, M, spaces, check=False)


def quotient(M: Module, spaces: Sequence[np.ndarray]) -> tuple[Module, ModuleMap]:
    """M modulo the submodule with the given per-vertex column bases."""
    A = M.algebra
    p = A.p
    comps, projs = [], []
    for v in range(A.n):
        s = la.column_space(_cols(spaces[v], M.dims[v]), p)
        c = la.complement_columns(s, M.dims[v], p)
        full = np.hstack([s, c])
        inv = la.inverse(full, p) if M.dims[v] else np.zeros((0, 0), dtype=np.int64)
        comps.append(c)
        projs.append(inv[s.shape[1]:, :])
    dims = [c.shape[1] for c in comps]
    mats = []
    for a, arrow in enumerate(A.quiver.arrows):
        v, w = arrow.src, arrow.tgt
        mats.append((projs[w] @ M.mats[a] @ comps[v]) % p)
    Q = Module(A, dims, mats, check=False)
    return Q, ModuleMap(M, Q, projs, check=False)


def kernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    p = f.p
    return submodule(f.src, [la.kernel(m, p) if m.shape[1] else np.zeros((0, 0), dtype=np.int64)
                             for m in f.mats])


def image(f: ModuleMap) -> tuple[Module, ModuleMap, ModuleMap]:
    """(Im f, the corestriction M -> Im f, the inclusion Im f -> N)."""
    p = f.p
    spaces = [la.column_space(m, p) for m in f.mats]
    I, inc = submodule(f.tgt, spaces)
    mats = []
    for v, m in enumerate(f.mats):
        if I.dims[v] == 0:
            mats.append(np.zeros((0, f.src.dims[v]), dtype=np.int64))
        else:
            mats.append(la.solve(spaces[v], m, p))
    return I, ModuleMap(f.src, I, mats, check=False), inc


def cokernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    return quotient(f.tgt, [la.column_space(m, f.p) for m in f.mats])


@dataclass
class Factorization:
    kernel: Module
    kernel_inclusion: ModuleMap
    image: Module
    coimage_map: ModuleMap
    image_inclusion: ModuleMap
    cokernel: Module
    cokernel_projection: ModuleMap

    def certify(self) -> None:
        ShortExactSequence(self.kernel_inclusion, self.coimage_map, "kernel/image").certify()
        ShortExactSequence(self.image_inclusion, self.cokernel_projection, "image/cokernel").certify()


def map_factorization(f: ModuleMap) -> Factorization:
    K, ki = kernel(f)
    I, co, ii = image(f)
    C, cp = cokernel(f)
    fac = Factorization(K, ki, I, co, ii, C, cp)
    fac.certify()
    return fac


def generated_submodule(M: Module, vectors: Sequence[tuple[int, np.ndarray]]) -> list[np.ndarray]:
    """Per-vertex bases of the submodule generated by (vertex, vector) pairs."""
    A = M.algebra
    p = A.p
    cols: list[list[np.ndarray]] = [[] for _ in range(A.n)]
    for v, x in vectors:
        x = np.asarray(x, dtype=np.int64).reshape(-1)
        for u in range(A.n):
            for q in A.between(v, u):
                y = (M.action(q) @ x) % p
                if np.any(y):
                    cols[u].append(y)
    return [la.column_space(np.array(c).T, p) if c else np.zeros((M.dims[u], 0), dtype=np.int64)
            for u, c in enumerate(cols)]


def radical(M: Module) -> list[np.ndarray]:
    """Per-vertex bases of rad M, the sum of the images of the arrows."""
    A = M.algebra
    p = A.p
    out = []
    for u in range(A.n):
        ims = [M.mats[a] for a, ar in enumerate(A.quiver.arrows) if ar.tgt == u and M.dims[ar.src]]
        if ims:
            out.append(la.column_space(np.hstack(ims), p))
        else:
            out.append(np.zeros((M.dims[u], 0), dtype=np.int64))
    return out


def socle(M: Module) -> list[np.ndarray]:
    """Per-vertex bases of soc M, the common kernel of the outgoing arrows."""
    A = M.algebra
    p = A.p
    out = []
    for u in range(A.n):
        outs = [M.mats[a] for a, ar in enumerate(A.quiver.arrows) if ar.src == u and M.dims[ar.tgt]]
        if outs and M.dims[u]:
            out.append(la.kernel(np.vstack(outs), p))
        else:
            out.append(np.eye(M.dims[u], dtype=np.int64))
    return out


def top_dims(M: Module) -> list[int]:
    return [d - r.shape[1] for d, r in zip(M.dims, radical(M))]


# ---------------------------------------------------------------------------
# sums, duals


def direct_sum(parts: Sequence[Module], A: PathAlgebra | None = None):
    """(⊕ parts, injections, projections)."""
    if not parts:
        if A is None:
            raise ModuleError("empty direct sum needs the algebra")
        Z = zero_module(A)
        return Z, [], []
    A = parts[0].algebra
    for M in parts:
        if M.algebra is not A:
            raise ModuleError("modules over different algebras")
    if len(parts) == 1:
        M = parts[0]
        return M, [M.identity()], [M.identity()]
    dims = [sum(M.dims[v] for M in parts) for v in range(A.n)]
    mats = []
    for a, arrow in enumerate(A.quiver.arrows):
        m = np.zeros((dims[arrow.tgt], dims[arrow.src]), dtype=np.int64)
        r = c = 0
        for M in parts:
            m[r:r + M.dims[arrow.tgt], c:c + M.dims[arrow.src]] = M.mats[a]
            r += M.dims[arrow.tgt]
            c += M.dims[arrow.src]
        mats.append(m)
    S = Module(A, dims, mats, check=False)
    if all(hasattr(M, "gens") for M in parts):
        S.gens = tuple(g for M in parts for g in M.gens)
    incs, projs = [], []
    starts = [0] * A.n
    for M in parts:
        im, pm = [], []
        for v in range(A.n):
            e = np.zeros((dims[v], M.dims[v]), dtype=np.int64)
            e[starts[v]:starts[v] + M.dims[v]] = np.eye(M.dims[v], dtype=np.int64)
            im.append(e)
            pm.append(e.T)
            starts[v] += M.dims[v]
        incs.append(ModuleMap(M, S, im, check=False))
        projs.append(ModuleMap(S, M, pm, check=False))
    return S, incs, projs


def sum_map(maps: Sequence[ModuleMap], src: Module, tgt: Module, row: bool) -> ModuleMap:
    """[f_1 ... f_k]: ⊕ X_i -> Y (row=True) or (f_1; ...; f_k): X -> ⊕ Y_i."""
    mats = []
    for v in range(src.algebra.n):
        blocks = [f.mats[v] for f in maps]
        if row:
            mats.append(np.hstack(blocks) if blocks else np.zeros((tgt.dims[v], 0), dtype=np.int64))
        else:
            mats.append(np.vstack(blocks) if blocks else np.zeros((0, src.dims[v]), dtype=np.int64))
    return ModuleMap(src, tgt, mats, check=False)


def dualize(M: Module) -> Module:
    """D M over the opposite algebra: transposed arrow matrices."""
    B = M.algebra.opposite()
    D = Module(B, M.dims, [m.T for m in M.mats], check=False)
    if hasattr(M, "gens"):
        D.cogens = M.gens
    return D


def dualize_map(f: ModuleMap, DM: Module | None = None, DN: Module | None = None) -> ModuleMap:
    """D f: D N -> D M."""
    DM = DM or dualize(f.src)
    DN = DN or dualize(f.tgt)
    return ModuleMap(DN, DM, [m.T for m in f.mats], check=False)


def base_change(M: Module, rng: np.random.Generator) -> tuple[Module, ModuleMap]:
    """M conjugated by random invertible matrices, with the isomorphism M -> M'."""
    p = M.p
    gs = []
    for d in M.dims:
        while True:
            g = rng.integers(0, p, size=(d, d), dtype=np.int64)
            if la.rank(g, p) == d:
                break
        gs.append(g)
    A = M.algebra
    mats = []
    for a, arrow in enumerate(A.quiver.arrows):
        mats.append((gs[arrow.tgt] @ M.mats[a] @ la.inverse(gs[arrow.src], p)) % p)
    N = Module(A, M.dims, mats, check=False)
    return N, ModuleMap(M, N, gs, check=False)


# ---------------------------------------------------------------------------
# isomorphism and decomposition


def is_isomorphic(M: Module, N: Module, witness: bool = False):
    """Decide M ≅ N; with ``witness`` return (bool, iso or None)."""
    res = _find_iso(M, N)
    return (res is not None, res) if witness else res is not None


def _find_iso(M: Module, N: Module) -> ModuleMap | None:
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    if M.dims != N.dims:
        return None
    if M.dim == 0:
        return M.zero_map(N)
    if M == N:
        return M.identity()
    for a in range(len(M.mats)):
        if la.rank(M.mats[a], M.p) != la.rank(N.mats[a], M.p):
            return None
    basis = hom_basis(M, N)
    h = len(basis)
    if h == 0:
        return None
    p = M.p
    full = [f.full() for f in basis]

    def attempt(coeffs):
        big = sum(int(c) * m for c, m in zip(coeffs, full)) % p
        if la.rank(big, p) == M.dim:
            f = ModuleMap.from_full(M, N, big, check=False)
            if f.is_homomorphism():
                return f
        return None

    rng = _rng_for(M, N, "iso")
    trials = settings.iso_trials if p > 3 else 4 * settings.iso_trials
    for _ in range(trials):
        f = attempt(rng.integers(0, p, size=h))
        if f is not None:
            return f
    if p ** h <= settings.exhaustive_limit:
        for coeffs in product(range(p), repeat=h):
            f = attempt(coeffs)
            if f is not None:
                return f
        return None
    # large Hom space: a generic element of a Hom space containing an
    # isomorphism is invertible with probability close to one; try harder
    for _ in range(4 * trials):
        f = attempt(rng.integers(0, p, size=h))
        if f is not None:
            return f
    return None


def _min_poly(F: np.ndarray, p: int) -> list[int]:
    """Minimal polynomial of a square matrix, coefficients high to low."""
    n = F.shape[0]
    powers = [np.eye(n, dtype=np.int64).reshape(-1)]
    cur = np.eye(n, dtype=np.int64)
    while True:
        cur = (cur @ F) % p
        basis = np.stack(powers, axis=1)
        sol = la.solve(basis, cur.reshape(-1), p)
        if sol is not None:
            coeffs = [1] + [int((-c) % p) for c in reversed(sol.tolist())]
            return coeffs
        powers.append(cur.reshape(-1))


def _poly_at(coeffs: Sequence[int], F: np.ndarray, p: int) -> np.ndarray:
    n = F.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for c in coeffs:
        out = (out @ F + int(c) * np.eye(n, dtype=np.int64)) % p
    return out


def _fitting_split(M: Module, F: np.ndarray):
    """Split M along Ker F^n ⊕ Im F^n for an endomorphism given as a full matrix."""
    p = M.p
    n = M.dim
    G = np.linalg.matrix_power(F, 1) % p
    for _ in range(max(1, n.bit_length())):
        G = (G @ G) % p
    r = la.rank(G, p)
    if r == 0 or r == n:
        return None
    f = ModuleMap.from_full(M, M, G, check=False)
    K, ki = kernel(f)
    I, _, ii = image(f)
    return (K, ki), (I, ii)


def _split_by(M: Module, F: np.ndarray):
    p = M.p
    split = _fitting_split(M, F)
    if split is not None:
        return split
    mp = _min_poly(F, p)
    _, factors = gf_factor([c % p for c in mp], p, ZZ)
    if len(factors) < 2:
        return None
    g, e = factors[0]
    return _fitting_split(M, _poly_at(g, F, p))


def _split_once(M: Module):
    """A nontrivial splitting M = K ⊕ I, or None when End M looks local."""
    basis = hom_basis(M, M)
    h = len(basis)
    if h <= 1:
        return None
    p = M.p
    full = [f.full() for f in basis]
    rng = _rng_for(M, "split")
    for f in full:
        s = _split_by(M, f)
        if s is not None:
            return s
    for _ in range(settings.iso_trials):
        F = sum(int(c) * m for c, m in zip(rng.integers(0, p, size=h), full)) % p
        s = _split_by(M, F)
        if s is not None:
            return s
    if p ** h <= settings.exhaustive_limit:
        for coeffs in product(range(p), repeat=h):
            F = sum(int(c) * m for c, m in zip(coeffs, full)) % p
            s = _split_by(M, F)
            if s is not None:
                return s
    return None


def indecomposable_parts(M: Module) -> list[Module]:
    if M.dim == 0:
        return []
    s = _split_once(M)
    if s is None:
        return [M]
    (K, _), (I, _) = s
    return indecomposable_parts(K) + indecomposable_parts(I)


def is_indecomposable(M: Module) -> bool:
    return M.dim > 0 and _split_once(M) is None


def decompose(M: Module, verify: bool = True) -> list[tuple[Module, int]]:
    """Indecomposable summands of M with multiplicities."""
    parts = indecomposable_parts(M)
    groups: list[list] = []
    for X in parts:
        for g in groups:
            if is_isomorphic(g[0], X):
                g[1] += 1
                break
        else:
            groups.append([X, 1])
    out = [(X, m) for X, m in groups]
    if verify and parts:
        S = direct_sum(parts)[0]
        if not is_isomorphic(S, M):
            raise ModuleError("internal error: decomposition does not reassemble")
    return out


def strip_projectives(M: Module) -> Module:
    """M with its projective summands removed (up to isomorphism)."""
    A = M.algebra
    proj = [free_module(A, [v]) for v in range(A.n)]
    keep = [X for X in indecomposable_parts(M)
            if not any(X.dims == P.dims and is_isomorphic(X, P) for P in proj)]
    return direct_sum(keep, A)[0]


# ---------------------------------------------------------------------------
# submodule enumeration


def _subspace_key(spaces: Sequence[np.ndarray], p: int) -> bytes:
    out = []
    for s in spaces:
        if s.shape[1] == 0:
            out.append(b"|")
            continue
        r, piv = la.rref(s.T, p)
        out.append(r[: len(piv)].tobytes() + b"|")
    return b"".join(out)


def _points(d: int, p: int):
    """Nonzero vectors of F_p^d up to scalars (first nonzero entry 1)."""
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def submodules(M: Module, max_total_dim: int | None = None,
               budget: int | None = None) -> list[tuple[Module, ModuleMap]]:
    """All submodules of M, as joins of cyclic submodules."""
    budget = budget or settings.submodule_budget
    A = M.algebra
    p = A.p
    npoints = sum((p ** d - 1) // (p - 1) for d in M.dims)
    if npoints > budget:
        raise EnumerationInfeasible(f"{npoints} cyclic generators exceed budget {budget}")
    zero = [np.zeros((d, 0), dtype=np.int64) for d in M.dims]
    found = {_subspace_key(zero, p): zero}
    cyclic = {}
    for v in range(A.n):
        for x in _points(M.dims[v], p):
            sp = generated_submodule(M, [(v, x)])
            k = _subspace_key(sp, p)
            cyclic.setdefault(k, sp)
    cyc = list(cyclic.values())
    queue = [zero]
    while queue:
        cur = queue.pop()
        for c in cyc:
            joined = [la.column_space(np.hstack([a, b]), p) for a, b in zip(cur, c)]
            k = _subspace_key(joined, p)
            if k not in found:
                found[k] = joined
                queue.append(joined)
                if len(found) > budget:
                    raise EnumerationInfeasible(f"more than {budget} submodules")
    out = []
    for sp in sorted(found.values(), key=lambda s: (sum(x.shape[1] for x in s), _subspace_key(s, p))):
        if max_total_dim is not None and sum(x.shape[1] for x in sp) > max_total_dim:
            continue
        out.append(submodule(M, sp))
    return out


# ---------------------------------------------------------------------------
# lifting and gluing


def lift_free(F: Module, g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """h: F -> g.src with g h = f, for F free and Im f inside Im g."""
    A = F.algebra
    images = []
    for i, v in enumerate(F.gens):
        y = generator_image(f, i)
        x = la.solve(g.mats[v], y, A.p) if g.src.dims[v] else (
            np.zeros(0, dtype=np.int64) if not np.any(y) else None)
        if x is None:
            raise ModuleError("map does not lift: image not contained in the image of g")
        images.append(np.asarray(x).reshape(-1))
    return map_from_generators(F, g.src, images)


def factor_through_mono(f: ModuleMap, inc: ModuleMap) -> ModuleMap:
    """h with inc h = f, for inc injective and Im f inside Im inc."""
    p = f.p
    mats = []
    for v in range(f.src.algebra.n):
        if inc.src.dims[v] == 0:
            if np.any(f.mats[v] % p):
                raise ModuleError("map does not factor through the monomorphism")
            mats.append(np.zeros((0, f.src.dims[v]), dtype=np.int64))
            continue
        x = la.solve(inc.mats[v], f.mats[v], p)
        if x is None:
            raise ModuleError("map does not factor through the monomorphism")
        mats.append(x)
    return ModuleMap(f.src, inc.src, mats, check=False)


def factor_through_epi(g: ModuleMap, proj: ModuleMap) -> ModuleMap:
    """h with h proj = g, for proj surjective and g vanishing on Ker proj."""
    p = g.p
    mats = []
    for v in range(g.src.algebra.n):
        d = proj.tgt.dims[v]
        if d == 0:
            mats.append(np.zeros((g.tgt.dims[v], 0), dtype=np.int64))
            continue
        section = la.solve(proj.mats[v], np.eye(d, dtype=np.int64), p)
        mats.append((g.mats[v] @ section) % p)
    h = ModuleMap(proj.tgt, g.tgt, mats, check=False)
    if h @ proj != g:
        raise ModuleError("map does not factor through the epimorphism")
    return h


def pullback(f: ModuleMap, g: ModuleMap):
    """(Pb, p1, p2) for f: X -> Z, g: Y -> Z, with f p1 = g p2."""
    X, Y = f.src, g.src
    S, _, (pX, pY) = direct_sum([X, Y])
    diff = f @ pX - g @ pY
    K, inc = kernel(diff)
    return K, pX @ inc, pY @ inc


def pushout(f: ModuleMap, g: ModuleMap):
    """(Po, i1, i2) for f: Z -> X, g: Z -> Y, with i1 f = i2 g."""
    X, Y = f.tgt, g.tgt
    S, (iX, iY), _ = direct_sum([X, Y])
    diff = iX @ f - iY @ g
    Q, proj = cokernel(diff)
    return Q, proj @ iX, proj @ iY


def free_block_map(src_parts: Sequence[Module], tgt_parts: Sequence[Module],
                   blocks: Sequence[Sequence[ModuleMap | None]]) -> ModuleMap:
    """A map between sums of free modules given by blocks[r][c]: src_parts[c] -> tgt_parts[r]."""
    A = (src_parts or tgt_parts)[0].algebra
    F1 = free_module(A, [g for P in src_parts for g in P.gens])
    F2 = free_module(A, [g for P in tgt_parts for g in P.gens])
    X = [[np.zeros(A.dim, dtype=np.int64) for _ in F1.gens] for _ in F2.gens]
    r0 = 0
    for r, T in enumerate(tgt_parts):
        c0 = 0
        for c, S in enumerate(src_parts):
            b = blocks[r][c]
            if b is not None and S.gens and T.gens:
                E = map_elements(b)
                for j in range(len(T.gens)):
                    for i in range(len(S.gens)):
                        X[r0 + j][c0 + i] = E[j][i]
            c0 += len(S.gens)
        r0 += len(T.gens)
    return free_map(F1, F2, X)


def summand_projection(parts: Sequence[Module], k: int) -> ModuleMap:
    """Projection of the free module on the concatenated generators onto parts[k]."""
    blocks = [[(P.identity() if c == k else None) for c, P in enumerate(parts)]]
    return free_block_map(parts, [parts[k]], blocks)


def summand_inclusion(parts: Sequence[Module], k: int) -> ModuleMap:
    blocks = [[parts[k].identity()] if r == k else [None] for r in range(len(parts))]
    return free_block_map([parts[k]], parts, blocks)
