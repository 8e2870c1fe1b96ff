"""Decision procedures for G_n(k), g_n(k), (l,n)-conditions and class membership.

Conventions. ``side`` is "left" (the algebra A itself) or "op" (A^op).

* A is G_n(k) iff fd I_i(A^op) <= i+k for 0 <= i < n (exact, fd route).
* A is g_n(k) iff grade Ext^{i+k}(C, A) >= i for every C in mod A and
  1 <= i <= n; for k = 0 this equals G_n(1) of A^op.
* A satisfies (l,n) iff sgrade Ext^l(C, A) >= n for C in mod A^op, iff
  fd I_i(A) < l for 0 <= i < n.  The weak variant uses grade.
* Y_{n,m} = add E(I_m, P_n), where M lies in E(I_m, P_n) when it has a
  submodule U with pd U < n and id M/U < m.

Universal statements over mod A are decided exactly when an fd criterion
exists and by bounded enumeration otherwise; every report says which.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .algebra import PathAlgebra
from .enumeration import ModuleList, enumerate_modules, is_nakayama
from .homology import (DEFAULT_CUTOFF, ext1_dim, ext_against_algebra, grade, injdim,
                       injective_resolution, pd, rgrade, syzygy, torsionfree_degree)
from .modules import (EnumerationInfeasible, Module, direct_sum, dualize, quotient,
                      regular_module, standard_module, submodules)
from .verdict import Verdict, vmax

__all__ = [
    "TheoremViolation",
    "ConditionReport",
    "FdProfile",
    "Membership",
    "side_algebra",
    "injective_profile",
    "check_G",
    "check_g",
    "check_ln",
    "derive_ln",
    "dominant_numbers",
    "DominantReport",
    "findim_estimate",
    "FindimReport",
    "membership",
    "parse_class",
    "in_E",
    "l_sequence_estimate",
    "test_modules",
]


class TheoremViolation(AssertionError):
    """A computed value contradicts a proven statement; always a bug."""


@dataclass
class ConditionReport:
    name: str
    params: dict
    verdict: str  # holds | fails | holds_up_to_bound | indeterminate
    method: str   # fd_criterion | enumeration | duality_reduction
    witness: object = None
    bound: int | None = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in ("holds", "fails", "holds_up_to_bound", "indeterminate"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fails" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def holds(self) -> bool | None:
        """True for holds or holds_up_to_bound, False for fails, None otherwise."""
        if self.verdict == "fails":
            return False
        if self.verdict == "indeterminate":
            return None
        return True

    @property
    def exact(self) -> bool:
        return self.verdict in ("holds", "fails")

    def to_json(self) -> dict:
        out = {"condition": self.name, "params": self.params, "verdict": self.verdict,
               "method": self.method}
        if self.bound is not None:
            out["bound"] = self.bound
        if self.witness is not None:
            out["witness"] = _witness_json(self.witness)
        if self.detail:
            out["detail"] = {k: _witness_json(v) for k, v in self.detail.items()}
        return out


def _witness_json(w):
    if isinstance(w, Module):
        return {"dims": list(w.dims), "mats": [m.tolist() for m in w.mats]}
    if isinstance(w, Verdict):
        return str(w)
    if isinstance(w, (list, tuple)):
        return [_witness_json(x) for x in w]
    if isinstance(w, dict):
        return {k: _witness_json(v) for k, v in w.items()}
    if isinstance(w, ConditionReport):
        return w.to_json()
    return w


def side_algebra(A: PathAlgebra, side: str) -> PathAlgebra:
    if side == "left":
        return A
    if side == "op":
        return A.opposite()
    raise ValueError(f"side must be 'left' or 'op', not {side!r}")


def _other(side: str) -> str:
    return "op" if side == "left" else "left"


def _vless(a: Verdict, b: Verdict) -> bool | None:
    """Is a < b, when it can be decided."""
    if a.kind == "infinite":
        return False
    if a.kind == "finite":
        if b.kind == "finite":
            return a.value < b.value
        if b.kind == "infinite":
            return True
        return True if a.value < b.value else None
    # a is at_least(c)
    if b.kind == "finite" and a.value >= b.value:
        return False
    return None


# ---------------------------------------------------------------------------
# fd profiles


@dataclass
class FdProfile:
    """fd I_i for the minimal injective resolution of the regular module.

    ``entries[i]`` is None when I_i = 0 (the resolution stopped earlier).
    """

    side: str
    entries: list
    generators: list

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def length(self) -> int:
        """Number of nonzero terms seen."""
        return sum(e is not None for e in self.entries)

    @property
    def terminated(self) -> bool:
        return bool(self.entries) and self.entries[-1] is None

    def values(self) -> list[str]:
        return ["-" if e is None else str(e) for e in self.entries]

    def to_json(self) -> dict:
        return {"side": self.side, "fd": self.values(),
                "generators": [list(g) for g in self.generators]}


def _fd_injective(A: PathAlgebra, v: int, cutoff: int) -> Verdict:
    key = ("fdE", v, cutoff)
    if key not in A._cache:
        A._cache[key] = pd(standard_module(A, "E", v), cutoff)
    return A._cache[key]


def injective_profile(A: PathAlgebra, depth: int, cutoff: int = DEFAULT_CUTOFF,
                      side: str = "left") -> FdProfile:
    """fd I_0 .. fd I_{depth-1} of the regular module over the chosen side.

    Over a finite-dimensional algebra fd = pd, and pd of a sum of E(v) is
    the max of the pd E(v).
    """
    B = side_algebra(A, side)
    R = injective_resolution(regular_module(B)).extend(depth)
    entries, gens = [], []
    for i in range(depth):
        g = R.generators(i) if not (R.done and i >= len(R.dual.terms)) else ()
        gens.append(tuple(g))
        if not g:
            entries.append(None)
            continue
        entries.append(vmax(_fd_injective(B, v, cutoff) for v in sorted(set(g))))
    return FdProfile(side, entries, gens)


def _profile_bound_check(prof: FdProfile, n: int, bound, strict: bool):
    """Check fd I_i <= bound(i) (or < when strict) for 0 <= i < n.

    Returns (verdict, witness) with verdict True, False or None.
    """
    unsettled = None
    for i in range(n):
        e = prof.entries[i] if i < len(prof.entries) else None
        if e is None:
            continue
        b = bound(i)
        r = e.lt(b) if strict else e.le(b)
        if r is False:
            return False, {"term": i, "side": prof.side, "fd": str(e),
                           "bound": f"{'<' if strict else '<='} {b}"}
        if r is None and unsettled is None:
            unsettled = {"term": i, "side": prof.side, "fd": str(e)}
    if unsettled is not None:
        return None, unsettled
    return True, None


def _infinite_depth(A: PathAlgebra, side: str, cutoff: int) -> int | None:
    """Number of terms needed for an n = infinity check, if the resolution stops."""
    B = side_algebra(A, side)
    R = injective_resolution(regular_module(B)).extend(cutoff)
    return len(R.dual.terms) + 1 if R.done else None


# ---------------------------------------------------------------------------
# G_n(k), g_n(k), (l,n)


def check_G(A: PathAlgebra, n: int | None, k: int, side: str = "left",
            cutoff: int = DEFAULT_CUTOFF) -> ConditionReport:
    """G_n(k) for the chosen side, via fd I_i(side^op) <= i+k.  n=None means infinity."""
    params = {"n": "inf" if n is None else n, "k": k, "side": side}
    other = _other(side)
    if n is None:
        depth = _infinite_depth(A, other, cutoff)
        if depth is None:
            return ConditionReport("G", params, "indeterminate", "fd_criterion",
                                   detail={"reason": f"injective resolution longer than {cutoff}"})
    else:
        depth = n
    prof = injective_profile(A, depth, cutoff, other)
    ok, wit = _profile_bound_check(prof, depth, lambda i: i + k, strict=False)
    verdict = {True: "holds", False: "fails", None: "indeterminate"}[ok]
    rep = ConditionReport("G", params, verdict, "fd_criterion",
                          witness=wit if ok is False else None,
                          detail={"profile": prof.values(), "profile_side": other})
    if ok is None:
        rep.detail["unsettled"] = wit
    return rep


def test_modules(A: PathAlgebra, side: str = "left", dim_bound: int = 6,
                 enum_p: int = 2) -> ModuleList:
    """Indecomposables used for enumeration verdicts.

    Nakayama algebras use the exact serial list over A itself; otherwise
    brute force runs over F_{enum_p} (the fixtures are monomial, so the
    module categories agree across characteristics).
    """
    B = side_algebra(A, side)
    if is_nakayama(B):
        return enumerate_modules(B, strategy="serial")
    return enumerate_modules(B.over(enum_p) if enum_p else B, dim_bound, strategy="generic")


def _grade_scan(mods: ModuleList, pairs, cutoff: int):
    """pairs: list of (degree, required grade).  Returns (verdict, witness)."""
    unsettled = None
    for C in mods:
        for deg, need in pairs:
            E = ext_against_algebra(C, deg)
            r = grade(E, max(cutoff, need + 1)).ge(need)
            if r is False:
                return False, {"module": C, "degree": deg, "grade": str(grade(E, cutoff)),
                               "required": need}
            if r is None and unsettled is None:
                unsettled = {"module": C, "degree": deg}
    if unsettled is not None:
        return None, unsettled
    return True, None


def _enum_report(name, params, ok, wit, mods: ModuleList) -> ConditionReport:
    if ok is False:
        verdict = "fails"
    elif ok is None:
        verdict = "indeterminate"
    else:
        verdict = "holds" if mods.method == "serial" else "holds_up_to_bound"
    return ConditionReport(name, params, verdict, "enumeration",
                           witness=wit if ok is False else None,
                           bound=mods.bound,
                           detail={"modules": len(mods), "list": mods.label})


def check_g(A: PathAlgebra, n: int, k: int, side: str = "left", dim_bound: int = 6,
            cutoff: int = DEFAULT_CUTOFF, method: str = "auto", crosscheck: bool = True,
            enum_p: int = 2) -> ConditionReport:
    """g_n(k) for the chosen side.

    method "fd" (k = 0 only) uses g_n(0) <=> G_n(1)^op; "enumeration" tests
    grade Ext^{i+k}(C) >= i over enumerated indecomposables; "auto" picks fd
    for k = 0.  For k = 1 the opposite side is enumerated too, since
    g_n(1) <=> g_n(1)^op; a one-sided failure is recorded as a mismatch.
    """
    params = {"n": n, "k": k, "side": side}
    if method == "auto":
        method = "fd" if k == 0 else "enumeration"
    if method == "fd":
        if k != 0:
            raise ValueError("the fd route exists only for k = 0")
        G = check_G(A, n, 1, _other(side), cutoff)
        rep = ConditionReport("g", params, G.verdict, "duality_reduction", witness=G.witness,
                              detail={"via": G.to_json()})
        return rep
    if method != "enumeration":
        raise ValueError(f"unknown method {method!r}")
    mods = test_modules(A, side, dim_bound, enum_p)
    ok, wit = _grade_scan(mods, [(i + k, i) for i in range(1, n + 1)], cutoff)
    rep = _enum_report("g", params, ok, wit, mods)
    if k == 1 and crosscheck:
        other = check_g(A, n, 1, _other(side), dim_bound, cutoff, "enumeration", False, enum_p)
        rep.detail["crosscheck"] = other.verdict
        rep.detail["mismatch"] = (other.holds is False) != (rep.holds is False)
    return rep


def check_ln(A: PathAlgebra, l: int, n: int, side: str = "left", weak: bool = False,
             dim_bound: int = 6, cutoff: int = DEFAULT_CUTOFF, enum_p: int = 2) -> ConditionReport:
    """(l,n)-condition for the chosen side (C ranges over modules of the other side)."""
    params = {"l": l, "n": n, "side": side, "weak": weak}
    name = "weak (l,n)" if weak else "(l,n)"
    if n == 0:
        return ConditionReport(name, params, "holds", "fd_criterion",
                               detail={"reason": "empty range"})
    if not weak:
        prof = injective_profile(A, n, cutoff, side)
        ok, wit = _profile_bound_check(prof, n, lambda i: l, strict=True)
        verdict = {True: "holds", False: "fails", None: "indeterminate"}[ok]
        return ConditionReport(name, params, verdict, "fd_criterion",
                               witness=wit if ok is False else None,
                               detail={"profile": prof.values()})
    mods = test_modules(A, _other(side), dim_bound, enum_p)
    ok, wit = _grade_scan(mods, [(l, n)], cutoff)
    return _enum_report(name, params, ok, wit, mods)


def derive_ln(facts) -> set:
    """Close a set of known (l,n) facts under the composition rules.

    A fact is (strength, l, n, side) with strength "strong" or "weak".  The
    rules: (k,l) + weak (l,n) => (k,n); weak (k,l) + weak (l,n) => weak (k,n);
    and the same with the second premise on the opposite side.  Strong implies
    weak.  Derived facts never override computed verdicts; callers compare.
    """
    known = set(facts)
    for s, l, n, side in list(known):
        if s == "strong":
            known.add(("weak", l, n, side))
    changed = True
    while changed:
        changed = False
        for s1, k, l, side in list(known):
            for s2, l2, n, side2 in list(known):
                if s2 != "weak" or l2 != l:
                    continue
                new = (s1, k, n, side)
                if new not in known:
                    known.add(new)
                    if s1 == "strong":
                        known.add(("weak", k, n, side))
                    changed = True
    return known


# ---------------------------------------------------------------------------
# dominant numbers and finitistic dimension


@dataclass
class DominantReport:
    side: str
    profile: FdProfile
    dominant: list          # (l, fd I_l)
    indeterminate: list     # indices that could not be decided

    def to_json(self) -> dict:
        return {"side": self.side, "profile": self.profile.values(),
                "dominant": [[l, str(v)] for l, v in self.dominant],
                "indeterminate": self.indeterminate}


def dominant_numbers(A: PathAlgebra, depth: int, cutoff: int = DEFAULT_CUTOFF,
                     side: str = "left") -> DominantReport:
    """All l < depth with fd I_i < fd I_l for every i < l, checking fd I_l >= l."""
    prof = injective_profile(A, depth, cutoff, side)
    dom, unknown = [], []
    for l, e in enumerate(prof.entries):
        if e is None:
            continue
        res = True
        for i in range(l):
            ei = prof.entries[i]
            r = _vless(ei, e) if ei is not None else True
            if r is False:
                res = False
                break
            if r is None:
                res = None
        if res is None:
            unknown.append(l)
        elif res:
            dom.append((l, e))
            if e.ge(l) is False:
                raise TheoremViolation(f"dominant number {l} has fd I_l = {e} < {l}")
    return DominantReport(side, prof, dom, unknown)


@dataclass
class FindimReport:
    lower: dict          # side -> max finite pd over the enumerated modules
    id_regular: dict     # side -> Verdict of id of the regular module
    hypotheses: dict     # side -> k with g_inf(k) established, or None
    checks: list         # (side, statement, bool)
    bound: int | None

    @property
    def ok(self) -> bool:
        return all(c[2] is not False for c in self.checks)

    def to_json(self) -> dict:
        return {"findim_lower_bound": self.lower,
                "id": {s: str(v) for s, v in self.id_regular.items()},
                "g_inf_k": self.hypotheses,
                "checks": [list(c) for c in self.checks], "bound": self.bound}


def findim_estimate(A: PathAlgebra, dim_bound: int = 6, cutoff: int = DEFAULT_CUTOFF,
                    enum_p: int = 2) -> FindimReport:
    """Lower bounds for fin.dim on both sides and the id of the regular modules.

    The inequalities fin.dim <= id <= fin.dim + k are checked on a side when
    g_inf(k) is established exactly: k = 0 from G_inf(1) of the other side,
    k = 1 from G_inf(1) of the side itself (G => g).
    """
    lower, ids, hyp, checks = {}, {}, {}, []
    bound = None
    for side in ("left", "op"):
        mods = test_modules(A, side, dim_bound, enum_p)
        bound = mods.bound if mods.bound is not None else bound
        best = 0
        for C in mods:
            v = pd(C, cutoff)
            if v.is_finite:
                best = max(best, v.value)
        lower[side] = best
        B = side_algebra(A, side)
        ids[side] = injdim(regular_module(B), cutoff)
        k = None
        if check_G(A, None, 1, _other(side), cutoff).verdict == "holds":
            k = 0
        elif check_G(A, None, 1, side, cutoff).verdict == "holds":
            k = 1
        hyp[side] = k
        idv = ids[side]
        if idv.is_finite:
            checks.append((side, "findim_lower <= id", best <= idv.value))
            if k is not None:
                checks.append((side, f"id <= findim + {k}", idv.value <= best + k))
    return FindimReport(lower, ids, hyp, checks, bound)


# ---------------------------------------------------------------------------
# class membership


@dataclass
class Membership:
    cls: str
    params: tuple
    value: bool | None
    method: str
    exact: bool = True
    witness: object = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        if self.value is None:
            raise ValueError(f"membership in {self.cls}{self.params} is undecided")
        return self.value

    def to_json(self) -> dict:
        out = {"class": f"{self.cls}{self.params}", "value": self.value,
               "method": self.method, "exact": self.exact}
        if self.detail:
            out["detail"] = _witness_json(self.detail)
        return out


def parse_class(spec) -> tuple[str, tuple]:
    """"X(1,2)" -> ("X", (1, 2)); tuples pass through."""
    if isinstance(spec, tuple):
        name, params = spec[0], tuple(int(x) for x in spec[1:])
    else:
        s = spec.replace(" ", "")
        if "(" not in s:
            raise ValueError(f"bad class {spec!r}")
        name, rest = s.split("(", 1)
        params = tuple(int(x) for x in rest.rstrip(")").split(",") if x)
    arity = {"W": 1, "F": 1, "P": 1, "I": 1, "X": 2, "Y": 2, "DXop": 2}
    if name not in arity or len(params) != arity[name]:
        raise ValueError(f"bad class {spec!r}")
    return name, params


def in_E(M: Module, n: int, m: int, cutoff: int = DEFAULT_CUTOFF):
    """A submodule U with pd U < n and id M/U < m, or None."""
    cutoff = max(cutoff, n + 1, m + 1)
    for U, inc in submodules(M):
        if U.dim and pd(U, cutoff).lt(n) is not True:
            continue
        Q, proj = quotient(M, inc.mats)
        if Q.dim and injdim(Q, cutoff).lt(m) is not True:
            continue
        return U, inc, Q, proj
    return None


def _y_search(M: Module, n: int, m: int, context: dict, cutoff: int) -> Membership:
    found = in_E(M, n, m, cutoff)
    if found is not None:
        return Membership("Y", (n, m), True, "submodule_search", True,
                          witness=found, detail={"in_E": True, "complement": None})
    # Y(n,m) lies in the Ext^1-perp of X(n,m-1) with no hypothesis: pd U < n kills
    # Ext^1 from W_n, and an (m-1)-torsionfree module is an (m-1)-th syzygy
    for X in context.get("modules", []):
        if (X.algebra is M.algebra and membership(X, ("X", n, m - 1), cutoff=cutoff).value
                and ext1_dim(X, M)):
            return Membership("Y", (n, m), False, "orthogonality_obstruction", True,
                              witness=X, detail={"in_E": False, "against": X.dims})
    extra = context.get("extra_dim", 4)
    pool = [X for X in context.get("modules", []) if X.algebra is M.algebra and X.dim <= extra]
    for size in range(1, extra + 1):
        for combo in combinations_with_replacement(range(len(pool)), size):
            parts = [pool[i] for i in combo]
            if sum(X.dim for X in parts) > extra:
                continue
            S = direct_sum([M] + parts)[0]
            try:
                hit = in_E(S, n, m, cutoff)
            except EnumerationInfeasible:
                continue
            if hit is not None:
                return Membership("Y", (n, m), True, "submodule_search", True, witness=hit,
                                  detail={"in_E": False, "complement": [X.dims for X in parts]})
    return Membership("Y", (n, m), False, "submodule_search", False,
                      detail={"in_E": False, "complement_bound": extra})


def membership(M: Module, cls, strategy: str = "auto", context: dict | None = None,
               cutoff: int = DEFAULT_CUTOFF) -> Membership:
    """Is M in W(n), F(m), P(n), I(n), X(n,m), Y(n,m) or DXop(n,m)?

    Y uses strategy "search" (submodules of M, then of M plus complements
    drawn from context["modules"]) or "orthogonal" (Ext^1(X, M) = 0 for every
    X in context["modules"] lying in X(n, m-1), which needs
    context["hypothesis"] to be a holding G_N(1) report with N large enough).
    """
    name, params = parse_class(cls)
    context = context or {}
    cut = max(cutoff, *(x + 2 for x in params))
    if name == "W":
        (n,) = params
        v = rgrade(M, cut).gt(n) if M.dim else True
        return Membership(name, params, v, "rgrade", v is not None, detail={"rgrade": str(rgrade(M, cut))})
    if name == "F":
        (m,) = params
        return Membership(name, params, M.dim == 0 or torsionfree_degree(M, m), "transpose")
    if name == "P":
        (n,) = params
        v = pd(M, cut).lt(n) if M.dim else True
        return Membership(name, params, v, "pd", v is not None, detail={"pd": str(pd(M, cut))})
    if name == "I":
        (n,) = params
        v = injdim(M, cut).lt(n) if M.dim else True
        return Membership(name, params, v, "id", v is not None, detail={"id": str(injdim(M, cut))})
    if name == "X":
        n, m = params
        w = membership(M, ("W", n), cutoff=cutoff)
        if w.value is False:
            return Membership(name, params, False, "W and F", True, detail={"W": False})
        f = membership(M, ("F", m), cutoff=cutoff)
        v = False if f.value is False else (None if w.value is None else True)
        return Membership(name, params, v, "W and F", v is not None,
                          detail={"W": w.value, "F": f.value})
    if name == "DXop":
        n, m = params
        inner = membership(dualize(M), ("X", n, m), cutoff=cutoff)
        return Membership(name, params, inner.value, "dual of X over the opposite", inner.exact)
    if name == "Y":
        n, m = params
        if M.dim == 0:
            return Membership(name, params, True, "zero")
        if m == 0:
            inner = membership(M, ("P", n), cutoff=cutoff)
            return Membership(name, params, inner.value, "Y(n,0) = P(n)", inner.exact)
        if n == 0:
            inner = membership(M, ("I", m), cutoff=cutoff)
            return Membership(name, params, inner.value, "Y(0,m) = I(m)", inner.exact)
        if strategy == "auto":
            strategy = "search"
        if strategy == "search":
            return _y_search(M, n, m, context, cut)
        if strategy == "orthogonal":
            hyp = context.get("hypothesis")
            need = max(m - 1, n + m - 2)
            if (not isinstance(hyp, ConditionReport) or hyp.name != "G" or hyp.verdict != "holds"
                    or hyp.params.get("k") != 1 or hyp.params.get("side") != "left"
                    or (hyp.params.get("n") != "inf" and hyp.params.get("n") < need)):
                raise ValueError("orthogonality test needs a holding G_N(1) report with "
                                 f"N >= {need}")
            for X in context.get("modules", []):
                if X.algebra is not M.algebra:
                    raise ValueError("context modules live over a different algebra")
                if membership(X, ("X", n, m - 1), cutoff=cutoff).value and ext1_dim(X, M):
                    return Membership(name, params, False, "orthogonality", True,
                                      witness=X, detail={"against": X})
            return Membership(name, params, True, "orthogonality", context.get("exhaustive", False))
        raise ValueError(f"unknown strategy {strategy!r}")
    raise ValueError(f"unknown class {name!r}")


# ---------------------------------------------------------------------------
# the sequence l_i


def l_sequence_estimate(A: PathAlgebra, max_i: int, dim_bound: int = 6, scan: int = 6,
                        enum_p: int = 2) -> dict:
    """Empirical l_i = least l with Omega^{l+1} C in F_{i+1} for all enumerated C.

    Entries are None when no l <= scan works.  Equal neighbours are listed
    under "equal_pairs"; they are observations, not errors.
    """
    mods = test_modules(A, "left", dim_bound, enum_p)
    seq = []
    for i in range(max_i + 1):
        found = None
        for l in range(scan + 1):
            if all(torsionfree_degree(syzygy(C, l + 1), i + 1) for C in mods
                   if syzygy(C, l + 1).dim):
                found = l
                break
        seq.append((i, found))
    equal = [(i, i + 1) for (i, a), (_, b) in zip(seq, seq[1:]) if a is not None and a == b]
    return {"sequence": seq, "equal_pairs": equal, "empirical": True,
            "modules": len(mods), "list": mods.label}
