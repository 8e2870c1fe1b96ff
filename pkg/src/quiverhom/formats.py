"""Line-oriented text formats for algebras and modules.

Algebra file::

    field 101
    vertices 1 2 3
    arrow a: 1 -> 2
    arrow b: 2 -> 3
    relation a*b - 2 c*d
    maxlen 30

Module file::

    dim 1=1 2=1 3=0
    matrix a
    1
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .algebra import PathAlgebra, Quiver, build_algebra

__all__ = ["FormatError", "AlgebraFile", "parse_algebra", "print_algebra",
           "parse_module", "print_module"]

_LABEL = r"[A-Za-z_][A-Za-z0-9_']*|[0-9]+"
_ARROW_RE = re.compile(rf"^arrow\s+([A-Za-z_][A-Za-z0-9_']*)\s*:\s*({_LABEL})\s*->\s*({_LABEL})\s*$")
_ARROW_LABEL = r"[A-Za-z_][A-Za-z0-9_']*"
_TERM_RE = re.compile(rf"^(?:(\d+)\*)?({_ARROW_LABEL}(?:\*{_ARROW_LABEL})*)$")


class FormatError(ValueError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class AlgebraFile:
    p: int = 101
    vertices: list[str] = field(default_factory=list)
    arrows: list[tuple[str, str, str]] = field(default_factory=list)
    relations: list[list[tuple[int, str]]] = field(default_factory=list)
    max_len: int = 30
    name: str = ""

    def quiver(self) -> Quiver:
        return Quiver(self.vertices, self.arrows)

    def build(self) -> PathAlgebra:
        return build_algebra(self.quiver(), self.relations, p=self.p,
                             max_len=self.max_len, name=self.name)

    def canonical(self) -> tuple:
        rels = []
        for rel in self.relations:
            terms: dict[str, int] = {}
            for c, path in rel:
                terms[path] = (terms.get(path, 0) + c) % self.p
            rels.append(tuple(sorted((k, v) for k, v in terms.items() if v)))
        return (self.p, tuple(self.vertices), tuple(self.arrows), tuple(rels), self.max_len)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraFile) and self.canonical() == other.canonical()


def _parse_relation(body: str, lineno: int, col0: int, arrows: set[str]) -> list[tuple[int, str]]:
    text = re.sub(r"\s*\*\s*", "*", body)
    text = re.sub(r"([+-])", r" \1 ", text)
    terms = []
    sign, coeff = 1, None
    for tok in text.split():
        col = col0 + max(body.find(tok.split("*")[0]), 0)
        if tok in "+-":
            if coeff is not None:
                raise FormatError("dangling coefficient", lineno, col)
            sign = -sign if tok == "-" else sign
            continue
        m = _TERM_RE.match(tok)
        if tok.isdigit() and coeff is None:
            coeff = int(tok)
            continue
        if not m:
            raise FormatError(f"malformed relation term {tok!r}", lineno, col)
        c = int(m.group(1)) if m.group(1) else 1
        if coeff is not None:
            c *= coeff
        labels = m.group(2).split("*")
        for lab in labels:
            if lab not in arrows:
                raise FormatError(f"unknown arrow {lab!r}", lineno, col)
        terms.append((sign * c, "*".join(labels)))
        sign, coeff = 1, None
    if not terms or coeff is not None:
        raise FormatError("empty or incomplete relation", lineno, col0)
    return terms


def parse_algebra(text: str, p: int | None = None, name: str = "") -> AlgebraFile:
    """Parse an algebra file; ``p`` overrides the file's ``field`` line."""
    af = AlgebraFile(name=name)
    seen_vertices = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw.find(line) + 1
        key = line.split()[0]
        if key == "field":
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError("expected 'field <p>'", lineno, col)
            af.p = int(parts[1])
        elif key == "vertices":
            if seen_vertices:
                raise FormatError("vertices declared twice", lineno, col)
            af.vertices = line.split()[1:]
            if len(set(af.vertices)) != len(af.vertices):
                raise FormatError("duplicate vertex", lineno, col)
            seen_vertices = True
        elif key == "arrow":
            m = _ARROW_RE.match(line)
            if not m:
                raise FormatError("expected 'arrow <label>: <v> -> <w>'", lineno, col)
            label, s, t = m.groups()
            for v in (s, t):
                if v not in af.vertices:
                    raise FormatError(f"unknown vertex {v!r}", lineno, col + line.find(v))
            if label in {a[0] for a in af.arrows}:
                raise FormatError(f"duplicate arrow {label!r}", lineno, col)
            af.arrows.append((label, s, t))
        elif key == "relation":
            body = line[len("relation"):]
            rel = _parse_relation(body, lineno, col + len("relation"), {a[0] for a in af.arrows})
            ends = set()
            src = {a[0]: a[1] for a in af.arrows}
            tgt = {a[0]: a[2] for a in af.arrows}
            for _, path in rel:
                labels = path.split("*")
                if len(labels) < 2:
                    raise FormatError(f"path {path!r} has length < 2", lineno, col)
                for x, y in zip(labels, labels[1:]):
                    if tgt[x] != src[y]:
                        raise FormatError(f"path {path!r} does not compose", lineno, col)
                ends.add((src[labels[0]], tgt[labels[-1]]))
            if len(ends) > 1:
                raise FormatError("relation terms are not parallel", lineno, col)
            af.relations.append(rel)
        elif key == "maxlen":
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError("expected 'maxlen <N>'", lineno, col)
            af.max_len = int(parts[1])
        else:
            raise FormatError(f"unknown directive {key!r}", lineno, col)
    if p is not None:
        af.p = p
    return af


def print_algebra(af: AlgebraFile) -> str:
    lines = [f"field {af.p}", "vertices " + " ".join(af.vertices)]
    for label, s, t in af.arrows:
        lines.append(f"arrow {label}: {s} -> {t}")
    for rel in af.relations:
        parts = []
        for i, (c, path) in enumerate(rel):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = path if mag == 1 else f"{mag} {path}"
            if i == 0:
                parts.append(term if sign == "+" else f"- {term}")
            else:
                parts.append(f"{sign} {term}")
        lines.append("relation " + " ".join(parts))
    lines.append(f"maxlen {af.max_len}")
    return "\n".join(lines) + "\n"


def parse_module(text: str, A: PathAlgebra):
    """Parse a module file over ``A``."""
    from .modules import Module

    lines = [(i, raw.split("#", 1)[0].strip()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, l) for i, l in lines if l]
    if not lines or not lines[0][1].startswith("dim"):
        raise FormatError("module file must start with 'dim'", lines[0][0] if lines else 1)
    dims = [0] * A.n
    for tok in lines[0][1].split()[1:]:
        if "=" not in tok:
            raise FormatError(f"expected <vertex>=<dim>, got {tok!r}", lines[0][0])
        v, d = tok.split("=", 1)
        if v not in A.quiver.vindex or not d.isdigit():
            raise FormatError(f"bad dimension entry {tok!r}", lines[0][0])
        dims[A.quiver.vindex[v]] = int(d)
    mats = {}
    pos = 1
    while pos < len(lines):
        lineno, line = lines[pos]
        parts = line.split()
        if parts[0] != "matrix" or len(parts) != 2 or parts[1] not in A.quiver.aindex:
            raise FormatError("expected 'matrix <arrow>'", lineno)
        ai = A.quiver.aindex[parts[1]]
        arrow = A.quiver.arrows[ai]
        rows, cols = dims[arrow.tgt], dims[arrow.src]
        pos += 1
        data = []
        if cols > 0:
            for _ in range(rows):
                if pos >= len(lines):
                    raise FormatError("matrix ended early", lineno)
                rl, rline = lines[pos]
                try:
                    row = [int(x) for x in rline.split()]
                except ValueError:
                    raise FormatError("non-integer matrix entry", rl) from None
                if len(row) != cols:
                    raise FormatError(f"expected {cols} entries", rl)
                data.append(row)
                pos += 1
        mats[ai] = np.array(data, dtype=np.int64).reshape(rows, cols)
    return Module(A, dims, [mats.get(i) for i in range(len(A.quiver.arrows))])


def print_module(M) -> str:
    A = M.algebra
    lines = ["dim " + " ".join(f"{v}={d}" for v, d in zip(A.quiver.vertices, M.dims))]
    for ai, arrow in enumerate(A.quiver.arrows):
        mat = M.mats[ai]
        if mat.size == 0:
            continue
        lines.append(f"matrix {arrow.label}")
        for row in mat:
            lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"
