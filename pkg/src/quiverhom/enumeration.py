"""Enumeration of indecomposable modules up to isomorphism."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import linalg as la
from .algebra import PathAlgebra
from .modules import (EnumerationInfeasible, Module, free_module, hom_dim, is_indecomposable,
                      is_isomorphic, quotient, radical, socle, standard_module, submodule)

__all__ = ["ModuleList", "enumerate_modules", "is_nakayama", "radical_layers",
           "is_uniserial", "serial_indecomposables", "generic_indecomposables"]

TUPLE_BUDGET = 1 << 22


@dataclass
class ModuleList:
    """Indecomposables found, with how they were found."""

    modules: list[Module]
    method: str
    bound: int | None = None
    exhaustive: bool = True
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.modules)

    def __len__(self):
        return len(self.modules)

    def __getitem__(self, i):
        return self.modules[i]

    @property
    def label(self) -> str:
        if self.method == "serial":
            return "exact (serial)"
        return f"exhaustive up to dimension {self.bound}"


def radical_layers(M: Module) -> list[int]:
    """Dimensions of rad^k M / rad^(k+1) M for k = 0, 1, ..."""
    layers = []
    cur = M
    while cur.dim:
        rad = radical(cur)
        r = sum(x.shape[1] for x in rad)
        layers.append(cur.dim - r)
        cur, _ = submodule(cur, rad)
    return layers


def is_uniserial(M: Module) -> bool:
    return all(x == 1 for x in radical_layers(M))


def is_nakayama(A: PathAlgebra) -> bool:
    return all(is_uniserial(free_module(A, [v])) and is_uniserial(standard_module(A, "E", v))
               for v in range(A.n))


def serial_indecomposables(A: PathAlgebra) -> list[Module]:
    """All P(v)/rad^k P(v), k >= 1, for a Nakayama algebra."""
    out: list[Module] = []
    for v in range(A.n):
        P = free_module(A, [v])
        chain = [[np.eye(d, dtype=np.int64) for d in P.dims]]
        cur = P
        inc = [np.eye(d, dtype=np.int64) for d in P.dims]
        while cur.dim:
            rad = radical(cur)
            inc = [(i @ r) % A.p for i, r in zip(inc, rad)]
            chain.append(inc)
            cur, _ = submodule(cur, rad)
        for k in range(1, len(chain)):
            Q, _ = quotient(P, chain[k])
            if not any(Q.dims == X.dims and is_isomorphic(Q, X) for X in out):
                out.append(Q)
    return out


def _connected(A: PathAlgebra, support: list[int]) -> bool:
    if not support:
        return False
    s = set(support)
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        v = stack.pop()
        for a in A.quiver.arrows:
            for x, y in ((a.src, a.tgt), (a.tgt, a.src)):
                if x == v and y in s and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == s


def _dimension_vectors(A: PathAlgebra, bound: int):
    for dims in product(range(bound + 1), repeat=A.n):
        if 0 < sum(dims) <= bound and _connected(A, [v for v, d in enumerate(dims) if d]):
            yield dims


def _signature(M: Module, end_dim: int) -> tuple:
    p = M.p
    ranks = tuple(la.rank(m, p) for m in M.mats)
    top = tuple(d - r.shape[1] for d, r in zip(M.dims, radical(M)))
    soc = tuple(s.shape[1] for s in socle(M))
    return (M.dims, end_dim, ranks, top, soc)


def _soc_in_rad(M: Module) -> bool:
    p = M.p
    for s, r in zip(socle(M), radical(M)):
        if s.shape[1] and la.rank(np.hstack([r, s]), p) > r.shape[1]:
            return False
    return True


def generic_indecomposables(A: PathAlgebra, bound: int, budget: int = TUPLE_BUDGET) -> ModuleList:
    """Brute force over all arrow-matrix tuples for each dimension vector."""
    p = A.p
    arrows = A.quiver.arrows
    buckets: dict[tuple, list[Module]] = {}
    found: list[Module] = []
    tuples = 0
    for dims in _dimension_vectors(A, bound):
        shapes = [(dims[a.tgt], dims[a.src]) for a in arrows]
        sizes = [r * c for r, c in shapes]
        count = p ** sum(sizes)
        tuples += count
        if tuples > budget:
            raise EnumerationInfeasible(f"more than {budget} matrix tuples up to dimension {bound}")
        total = sum(dims)
        for flat in product(range(p), repeat=sum(sizes)):
            mats, pos = [], 0
            for (r, c), s in zip(shapes, sizes):
                mats.append(np.array(flat[pos:pos + s], dtype=np.int64).reshape(r, c))
                pos += s
            M = Module(A, dims, mats, check=False)
            if not _relations_hold(M):
                continue
            if total > 1 and not _soc_in_rad(M):
                continue
            e = hom_dim(M, M)
            if e > 1 and not is_indecomposable(M):
                continue
            sig = _signature(M, e)
            bucket = buckets.setdefault(sig, [])
            if any(is_isomorphic(M, X) for X in bucket):
                continue
            bucket.append(M)
            found.append(M)
    return ModuleList(found, "generic", bound, True, {"tuples": tuples})


def _relations_hold(M: Module) -> bool:
    p = M.p
    for rel in M.algebra.relations:
        acc = None
        for path, c in rel.items():
            t = c * M.path_matrix(path)
            acc = t if acc is None else acc + t
        if acc is not None and np.any(acc % p):
            return False
    return True


def _sort_key(M: Module):
    return (M.dim, M.dims, M.key())


def enumerate_modules(A: PathAlgebra, total_dim_bound: int = 6, strategy: str = "auto",
                      budget: int = TUPLE_BUDGET) -> ModuleList:
    """Indecomposable modules up to isomorphism.

    ``strategy`` is "serial" (Nakayama algebras: the exact list), "generic"
    (brute force up to the bound) or "auto".
    """
    key = ("enum", total_dim_bound, strategy)
    if key in A._cache:
        return A._cache[key]
    if strategy == "auto":
        strategy = "serial" if is_nakayama(A) else "generic"
    if strategy == "serial":
        if not is_nakayama(A):
            raise ValueError("serial enumeration needs a Nakayama algebra")
        mods = sorted(serial_indecomposables(A), key=_sort_key)
        res = ModuleList(mods, "serial", None, True)
    elif strategy == "generic":
        res = generic_indecomposables(A, total_dim_bound, budget)
        res.modules.sort(key=_sort_key)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    A._cache[key] = res
    return res
