"""Extended natural numbers with an honest notion of "not settled yet"."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = ["Verdict", "finite", "at_least", "infinite", "vmax", "vmin"]


@dataclass(frozen=True)
class Verdict:
    """finite(k), at_least(c) (true value >= c, possibly infinite) or infinite."""

    kind: str
    value: int | None = None
    certificate: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("finite", "at_least", "infinite"):
            raise ValueError(f"bad verdict kind {self.kind!r}")

    @property
    def settled(self) -> bool:
        return self.kind != "at_least"

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def ge(self, n: int) -> bool | None:
        if self.kind == "finite":
            return self.value >= n
        if self.kind == "infinite":
            return True
        return True if self.value >= n else None

    def gt(self, n: int) -> bool | None:
        return self.ge(n + 1)

    def lt(self, n: int) -> bool | None:
        r = self.ge(n)
        return None if r is None else not r

    def le(self, n: int) -> bool | None:
        return self.lt(n + 1)

    def __str__(self) -> str:
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "infinite":
            return "inf"
        return f">={self.value}"

    def to_json(self):
        out = {"kind": self.kind}
        if self.value is not None:
            out["value"] = self.value
        if self.certificate is not None:
            out["certificate"] = list(self.certificate)
        return out


def finite(k: int) -> Verdict:
    return Verdict("finite", int(k))


def at_least(c: int) -> Verdict:
    return Verdict("at_least", int(c))


def infinite(certificate: tuple | None = None) -> Verdict:
    return Verdict("infinite", None, certificate)


def vmax(vs: Iterable[Verdict]) -> Verdict:
    vs = list(vs)
    if not vs:
        return finite(0)
    if any(v.kind == "infinite" for v in vs):
        return next(v for v in vs if v.kind == "infinite")
    fin = max((v.value for v in vs if v.kind == "finite"), default=None)
    low = [v.value for v in vs if v.kind == "at_least"]
    if not low:
        return finite(fin)
    return at_least(max(low + ([fin] if fin is not None else [])))


def vmin(vs: Iterable[Verdict]) -> Verdict:
    vs = list(vs)
    if not vs:
        return infinite(("empty",))
    fin = min((v.value for v in vs if v.kind == "finite"), default=None)
    low = min((v.value for v in vs if v.kind == "at_least"), default=None)
    if fin is None and low is None:
        return infinite(("all infinite",))
    if low is None or (fin is not None and fin <= low):
        return finite(fin)
    return at_least(low)
