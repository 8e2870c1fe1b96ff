"""Path algebras kQ/I over F_p with an explicit path basis.

Paths compose left to right: the path ``a*b`` runs along ``a`` first and then
along ``b``, so it only exists when the target of ``a`` is the source of ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .linalg import is_prime, rref

__all__ = [
    "Arrow",
    "Quiver",
    "PathAlgebra",
    "AlgebraError",
    "build_algebra",
    "multiply",
    "normalize_relation",
]

MAX_PATHS = 200_000


class AlgebraError(ValueError):
    """Bad quiver, bad relation, or an algebra that is not finite-dimensional."""


@dataclass(frozen=True)
class Arrow:
    label: str
    src: int
    tgt: int


class Quiver:
    """Finite quiver with labelled vertices and arrows."""

    def __init__(self, vertices: Sequence, arrows: Iterable[tuple]):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex label")
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.arrows: list[Arrow] = []
        self.aindex: dict[str, int] = {}
        for label, s, t in arrows:
            label = str(label)
            if label in self.aindex or label in self.vindex:
                raise AlgebraError(f"duplicate label {label!r}")
            for v in (s, t):
                if str(v) not in self.vindex:
                    raise AlgebraError(f"arrow {label!r} uses unknown vertex {v!r}")
            self.aindex[label] = len(self.arrows)
            self.arrows.append(Arrow(label, self.vindex[str(s)], self.vindex[str(t)]))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, v) -> int:
        """Index of vertex ``v`` given by label or index."""
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            if 0 <= v < self.n:
                return int(v)
        elif str(v) in self.vindex:
            return self.vindex[str(v)]
        raise AlgebraError(f"unknown vertex {v!r}")

    def reversed(self) -> Quiver:
        return Quiver(self.vertices,
                      [(a.label, self.vertices[a.tgt], self.vertices[a.src]) for a in self.arrows])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __repr__(self) -> str:
        arrows = ", ".join(f"{a.label}:{self.vertices[a.src]}->{self.vertices[a.tgt]}"
                           for a in self.arrows)
        return f"Quiver({self.vertices}, [{arrows}])"


def _split_path(quiver: Quiver, path) -> tuple[int, ...]:
    if isinstance(path, str):
        labels = [s.strip() for s in path.split("*")]
    else:
        labels = list(path)
    out = []
    for lab in labels:
        if isinstance(lab, (int, np.integer)):
            out.append(int(lab))
        elif lab in quiver.aindex:
            out.append(quiver.aindex[lab])
        else:
            raise AlgebraError(f"unknown arrow {lab!r}")
    return tuple(out)


def normalize_relation(quiver: Quiver, rel, p: int) -> dict[tuple[int, ...], int]:
    """Turn a relation into {arrow-index path: coefficient mod p}.

    ``rel`` may be a path string like ``"a*b"``, a mapping path -> coefficient,
    or a list of (coefficient, path) pairs.
    """
    if isinstance(rel, (str, tuple)):
        items = [(1, rel)]
    elif isinstance(rel, Mapping):
        items = [(c, path) for path, c in rel.items()]
    else:
        items = list(rel)
    terms: dict[tuple[int, ...], int] = {}
    for c, path in items:
        key = _split_path(quiver, path)
        terms[key] = (terms.get(key, 0) + int(c)) % p
    terms = {k: c for k, c in terms.items() if c}
    ends = set()
    for path in terms:
        if len(path) < 2:
            raise AlgebraError("relation contains a path of length < 2 (not admissible)")
        for x, y in zip(path, path[1:]):
            if quiver.arrows[x].tgt != quiver.arrows[y].src:
                raise AlgebraError("relation contains a path that does not compose")
        ends.add((quiver.arrows[path[0]].src, quiver.arrows[path[-1]].tgt))
    if len(ends) > 1:
        raise AlgebraError("relation terms are not parallel")
    return terms


def _path_ends(quiver: Quiver, path: tuple) -> tuple[int, int]:
    src, arrows = path
    if not arrows:
        return src, src
    return quiver.arrows[arrows[0]].src, quiver.arrows[arrows[-1]].tgt


def _enumerate_paths(quiver: Quiver, below: int) -> list[list[tuple]]:
    """Paths grouped by length, for lengths 0 .. below-1."""
    layers = [[(v, ()) for v in range(quiver.n)]]
    out_arrows = [[i for i, a in enumerate(quiver.arrows) if a.src == v] for v in range(quiver.n)]
    total = quiver.n
    for _ in range(1, below):
        nxt = []
        for v, arrows in layers[-1]:
            end = _path_ends(quiver, (v, arrows))[1]
            for a in out_arrows[end]:
                nxt.append((v, arrows + (a,)))
        total += len(nxt)
        if total > MAX_PATHS:
            raise AlgebraError("not finite-dimensional within bound (path count explodes)")
        layers.append(nxt)
    return layers


def _ideal_rows(quiver, relations, layers, m):
    """Generators u*r*w of the ideal, truncated below length m, keyed by block."""
    by_tgt: dict[int, list[tuple]] = {}
    by_src: dict[int, list[tuple]] = {}
    for layer in layers:
        for path in layer:
            s, t = _path_ends(quiver, path)
            by_tgt.setdefault(t, []).append(path)
            by_src.setdefault(s, []).append(path)
    rows: dict[tuple[int, int], list[dict]] = {}
    for rel in relations:
        some = next(iter(rel))
        rs, rt = quiver.arrows[some[0]].src, quiver.arrows[some[-1]].tgt
        shortest = min(len(x) for x in rel)
        for u in by_tgt.get(rs, []):
            for w in by_src.get(rt, []):
                if len(u[1]) + shortest + len(w[1]) >= m:
                    continue
                s = _path_ends(quiver, u)[0]
                t = _path_ends(quiver, w)[1]
                elem = {}
                for path, c in rel.items():
                    full = u[1] + path + w[1]
                    if len(full) < m:
                        elem[(s, full)] = c
                if elem:
                    rows.setdefault((s, t), []).append(elem)
    return rows


class PathAlgebra:
    """kQ/I with a basis of normal-form paths and a structure-constant table.

    ``table[i, j, k]`` is the coefficient of basis element k in b_i * b_j.
    """

    def __init__(self, quiver: Quiver, p: int, basis: list[tuple], table: np.ndarray,
                 nilpotency: int, relations: list[dict], name: str = ""):
        self.quiver = quiver
        self.p = p
        self.basis = basis
        self.table = table
        self.table.setflags(write=False)
        self.nilpotency = nilpotency
        self.relations = relations
        self.name = name
        self._op: PathAlgebra | None = None
        self.index = {b: i for i, b in enumerate(basis)}
        ends = [_path_ends(quiver, b) for b in basis]
        self.src = np.array([e[0] for e in ends], dtype=np.int64)
        self.tgt = np.array([e[1] for e in ends], dtype=np.int64)
        self.length = np.array([len(b[1]) for b in basis], dtype=np.int64)
        self.idempotents = [self.index[(v, ())] for v in range(quiver.n)]
        self.arrow_basis = [self.index[(a.src, (i,))] for i, a in enumerate(quiver.arrows)]
        self._blocks: dict[tuple[int, int], list[int]] = {}
        for i, (s, t) in enumerate(ends):
            self._blocks.setdefault((s, t), []).append(i)
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.quiver.n

    def vertex(self, v) -> int:
        return self.quiver.vertex(v)

    def between(self, s: int, t: int) -> list[int]:
        """Basis indices of paths from s to t (the space e_s Λ e_t)."""
        return self._blocks.get((s, t), [])

    def path_label(self, i: int) -> str:
        s, arrows = self.basis[i]
        if not arrows:
            return f"e{self.quiver.vertices[s]}"
        return "*".join(self.quiver.arrows[a].label for a in arrows)

    def element(self, path) -> np.ndarray:
        """The algebra element of a path given as ``"a*b"``, a label tuple or ``"e<v>"``."""
        x = np.zeros(self.dim, dtype=np.int64)
        if isinstance(path, str) and path.startswith("e") and path[1:] in self.quiver.vindex:
            x[self.idempotents[self.quiver.vindex[path[1:]]]] = 1
            return x
        arrows = _split_path(self.quiver, path)
        x[self.arrow_basis[arrows[0]]] = 1
        for a in arrows[1:]:
            y = np.zeros(self.dim, dtype=np.int64)
            y[self.arrow_basis[a]] = 1
            x = self.multiply(x, y)
        return x

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.table) % self.p

    def one(self) -> np.ndarray:
        x = np.zeros(self.dim, dtype=np.int64)
        x[self.idempotents] = 1
        return x

    def right_mult(self, b: int) -> np.ndarray:
        """Matrix of y -> y * b_b on the whole algebra (columns indexed by y)."""
        return self.table[:, b, :].T

    def left_mult(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y -> x * y on the whole algebra."""
        return np.tensordot(x, self.table, axes=(0, 0)).T % self.p

    def opposite(self) -> PathAlgebra:
        if self._op is None:
            q = self.quiver.reversed()
            basis = []
            for b in self.basis:
                s, t = _path_ends(self.quiver, b)
                basis.append((t, tuple(reversed(b[1]))))
            rels = [{tuple(reversed(k)): c for k, c in r.items()} for r in self.relations]
            name = self.name[:-3] if self.name.endswith("^op") else (self.name + "^op" if self.name else "")
            op = PathAlgebra(q, self.p, basis, np.ascontiguousarray(self.table.transpose(1, 0, 2)),
                             self.nilpotency, rels, name)
            op._op = self
            self._op = op
        return self._op

    def over(self, p: int) -> PathAlgebra:
        """The same quiver and relations over F_p (coefficients lifted to [-p/2, p/2])."""
        if p == self.p:
            return self
        key = ("over", p)
        if key not in self._cache:
            half = self.p // 2
            rels = [{k: (c if c <= half else c - self.p) for k, c in r.items()} for r in self.relations]
            self._cache[key] = build_algebra(self.quiver, rels, p, max(self.nilpotency, 1) + 1, self.name)
        return self._cache[key]

    def check_associative(self) -> bool:
        t = self.table
        left = np.einsum("abk,kcl->abcl", t, t) % self.p
        right = np.einsum("bck,akl->abcl", t, t) % self.p
        return bool(np.array_equal(left, right))

    def __repr__(self) -> str:
        return f"PathAlgebra({self.name or 'unnamed'}, p={self.p}, dim={self.dim})"


def build_algebra(quiver: Quiver, relations: Iterable = (), p: int = 101,
                  max_len: int = 30, name: str = "") -> PathAlgebra:
    """Compute a basis and structure constants for kQ/I.

    The ideal is spanned, length by length, by the products u*r*w truncated at
    the current bound m; normal forms are chosen per (source, target) block by
    row reduction with longer paths ordered first.  The nilpotency index N is
    the least length with every path of length N lying in I + J^(N+1).
    """
    if not is_prime(p):
        raise AlgebraError(f"{p} is not prime")
    rels = [normalize_relation(quiver, r, p) for r in relations]
    rels = [r for r in rels if r]
    for n in range(1, max_len + 1):
        m = n + 1
        layers = _enumerate_paths(quiver, m)
        gens = _ideal_rows(quiver, rels, layers, m)
        blocks: dict[tuple[int, int], list[tuple]] = {}
        for layer in reversed(layers):
            for path in layer:
                blocks.setdefault(_path_ends(quiver, path), []).append(path)
        ok = True
        reduced: dict[tuple, dict] = {}
        normal: set[tuple] = set()
        for key, cols in blocks.items():
            rows = gens.get(key, [])
            col_of = {c: i for i, c in enumerate(cols)}
            if rows:
                mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
                for i, elem in enumerate(rows):
                    for path, c in elem.items():
                        mat[i, col_of[path]] = c
                r, pivots = rref(mat, p)
            else:
                r, pivots = np.zeros((0, len(cols)), dtype=np.int64), []
            pset = set(pivots)
            free = [c for c in range(len(cols)) if c not in pset]
            for c in free:
                normal.add(cols[c])
            for i, pc in enumerate(pivots):
                tail = {cols[f]: (-int(r[i, f])) % p for f in free if r[i, f]}
                reduced[cols[pc]] = tail
                if len(cols[pc][1]) == n and tail:
                    ok = False
            for c in free:
                if len(cols[c][1]) == n:
                    ok = False
        if not ok:
            continue
        basis = sorted(normal, key=lambda b: (len(b[1]), b[1], b[0]))
        index = {b: i for i, b in enumerate(basis)}
        d = len(basis)
        table = np.zeros((d, d, d), dtype=np.int64)
        for i, (si, ai) in enumerate(basis):
            ti = _path_ends(quiver, (si, ai))[1]
            for j, (sj, aj) in enumerate(basis):
                if sj != ti:
                    continue
                full = (si, ai + aj)
                if len(full[1]) >= m:
                    continue
                if full in index:
                    table[i, j, index[full]] = 1
                else:
                    for path, c in reduced.get(full, {}).items():
                        table[i, j, index[path]] = c
        alg = PathAlgebra(quiver, p, basis, table, n, rels, name)
        if not alg.check_associative():
            raise AlgebraError("internal error: structure constants are not associative")
        one = alg.one()
        for k in range(d):
            e = np.zeros(d, dtype=np.int64)
            e[k] = 1
            if not (np.array_equal(alg.multiply(one, e), e) and np.array_equal(alg.multiply(e, one), e)):
                raise AlgebraError("internal error: idempotents do not sum to 1")
        return alg
    raise AlgebraError(f"not finite-dimensional within bound {max_len}")


def multiply(A: PathAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return A.multiply(x, y)
