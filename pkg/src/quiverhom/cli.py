"""Command line interface.

Exit codes: 0 when a verdict was computed, 1 when the selftest finds a
failing criterion, 2 for usage errors, 3 when a verdict stays undecided or
an enumeration budget is exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import approx as ap
from . import conditions as cd
from . import homology as hm
from .algebra import AlgebraError, PathAlgebra
from .fixtures import FIXTURE_NAMES, fixture
from .formats import FormatError, parse_algebra, parse_module, print_module
from .modules import EnumerationInfeasible, ModuleError, settings, standard_module

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    """One command run: the echo, the configuration and the result rows."""

    command: str
    config: dict
    rows: list = field(default_factory=list)
    columns: list = field(default_factory=list)
    undecided: bool = False
    failed: bool = False

    def add(self, **row) -> None:
        self.rows.append(row)

    def machine(self) -> str:
        lines = [json.dumps({"command": self.command, "config": self.config}, sort_keys=True)]
        lines += [json.dumps(r, sort_keys=True, default=str) for r in self.rows]
        return "\n".join(lines)

    def human(self) -> str:
        cols = self.columns or sorted({k for r in self.rows for k in r})
        cells = [[_cell(r.get(c, "")) for c in cols] for r in self.rows]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
        out = [f"# {self.command}  " + " ".join(f"{k}={v}" for k, v in self.config.items()
                                                if v is not None)]
        out.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        out.append("  ".join("-" * w for w in widths))
        out += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(out)

    @property
    def exit_code(self) -> int:
        if self.failed:
            return EXIT_FAIL
        return EXIT_UNDECIDED if self.undecided else EXIT_OK


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, default=str)
    return str(v)


# ---------------------------------------------------------------------------
# argument handling


def _common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("common options")
    g.add_argument("--algebra", metavar="FILE", help="algebra file")
    g.add_argument("--fixture", choices=FIXTURE_NAMES, help="shipped example algebra")
    g.add_argument("--cutoff", type=int, default=hm.DEFAULT_CUTOFF,
                   help="resolution length scanned before answering at-least")
    g.add_argument("--dim-bound", type=int, default=6, help="total dimension for enumeration")
    g.add_argument("--p", type=int, default=None, help="field characteristic override")
    g.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    g.add_argument("--json", action="store_true", help="line-delimited JSON output")
    g.add_argument("--trace", action="store_true", help="include construction traces")


def _module_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--module", metavar="FILE", help="module file")
    g.add_argument("--standard", metavar="KIND:V",
                   help="simple:V, projective:V or injective:V for a vertex label V")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverhom",
                                     description="Homological conditions for quiver algebras over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="fd of the injective resolution terms, both sides")
    p.add_argument("--depth", type=int, default=3)
    _common(p)

    p = sub.add_parser("check", help="decide G_n(k), g_n(k), (l,n), dominant numbers, fin.dim")
    p.add_argument("--cond", required=True,
                   choices=["G", "g", "ln", "weak-ln", "dominant", "findim"])
    p.add_argument("--n", default="1", help="n (an integer, or inf for G)")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--side", choices=["left", "op", "both"], default="both")
    p.add_argument("--method", choices=["auto", "fd", "enumeration"], default="auto")
    p.add_argument("--depth", type=int, default=4, help="depth for dominant numbers")
    _common(p)

    p = sub.add_parser("grade", help="grade, rgrade and sgrade of a module")
    _module_args(p)
    _common(p)

    p = sub.add_parser("resolve", help="minimal projective or injective resolution")
    _module_args(p)
    p.add_argument("--direction", choices=["projective", "injective"], default="projective")
    p.add_argument("--length", type=int, default=4)
    _common(p)

    p = sub.add_parser("tr", help="transpose of a module (a module over the opposite algebra)")
    _module_args(p)
    _common(p)

    p = sub.add_parser("ext", help="Ext^i(M, algebra) for a range of degrees")
    _module_args(p)
    p.add_argument("--degree", type=int, default=None, help="single degree (default 0..3)")
    _common(p)

    p = sub.add_parser("approx", help="approximation sequences")
    p.add_argument("--kind", required=True, choices=["mapping-cone", "g", "coresolution",
                                                     "cotorsion"])
    _module_args(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--side", choices=["precover", "preenvelope", "both"], default="precover")
    _common(p)

    p = sub.add_parser("cotorsion-verify", help="check a cotorsion pair over indecomposables")
    p.add_argument("--pair", choices=["XY", "YDX"], default="XY")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--extra-dim", type=int, default=4)
    _common(p)

    p = sub.add_parser("explore-l", help="empirical l_i sequence from enumerated modules")
    p.add_argument("--max-i", type=int, default=3)
    p.add_argument("--scan", type=int, default=6)
    _common(p)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers")
    _common(p)
    return parser


def load_algebra(args) -> PathAlgebra:
    if args.algebra and args.fixture:
        raise UsageError("give --algebra or --fixture, not both")
    if args.algebra:
        with open(args.algebra, encoding="utf-8") as fh:
            return parse_algebra(fh.read(), p=args.p, name=args.algebra).build()
    if args.fixture:
        return fixture(args.fixture, args.p or 101)
    raise UsageError("an algebra is required: use --algebra FILE or --fixture NAME")


def load_module(args, A: PathAlgebra):
    if args.module:
        with open(args.module, encoding="utf-8") as fh:
            return parse_module(fh.read(), A)
    kind, _, v = args.standard.partition(":")
    if not v or kind not in ("simple", "projective", "injective"):
        raise UsageError("--standard expects simple:V, projective:V or injective:V")
    return standard_module(A, kind, v)


def _config(args) -> dict:
    keys = ("algebra", "fixture", "cutoff", "dim_bound", "p", "seed")
    return {k: getattr(args, k, None) for k in keys}


def _sides(side: str):
    return ("left", "op") if side == "both" else (side,)


# ---------------------------------------------------------------------------
# commands


def cmd_profile(args, rep: RunReport) -> None:
    A = load_algebra(args)
    rep.columns = ["side", "fd", "generators"]
    for side in ("left", "op"):
        prof = cd.injective_profile(A, args.depth, args.cutoff, side)
        rep.add(side=side, fd=prof.values(),
                generators=[[A.quiver.vertices[v] for v in g] for g in prof.generators])
        rep.undecided |= any(e is not None and not e.settled for e in prof.entries)


def _report_row(rep: RunReport, r: cd.ConditionReport, trace: bool) -> None:
    row = {"condition": r.name, "params": r.params, "verdict": r.verdict, "method": r.method}
    if r.witness is not None:
        row["witness"] = cd._witness_json(r.witness)
    if r.bound is not None:
        row["bound"] = r.bound
    if trace and r.detail:
        row["detail"] = cd._witness_json(r.detail)
    rep.add(**row)
    rep.undecided |= r.verdict == "indeterminate"


def cmd_check(args, rep: RunReport) -> None:
    A = load_algebra(args)
    rep.columns = ["condition", "params", "verdict", "method", "witness"]
    if args.cond in ("G", "g", "ln", "weak-ln"):
        n = None if args.n == "inf" else int(args.n)
        if n is None and args.cond != "G":
            raise UsageError("--n inf is only available for G")
        for side in _sides(args.side):
            if args.cond == "G":
                r = cd.check_G(A, n, args.k, side, args.cutoff)
            elif args.cond == "g":
                r = cd.check_g(A, n, args.k, side, args.dim_bound, args.cutoff, args.method)
            else:
                r = cd.check_ln(A, args.l, n, side, args.cond == "weak-ln", args.dim_bound,
                                args.cutoff)
            _report_row(rep, r, args.trace)
    elif args.cond == "dominant":
        rep.columns = ["side", "profile", "dominant", "indeterminate"]
        for side in _sides(args.side):
            d = cd.dominant_numbers(A, args.depth, args.cutoff, side)
            rep.add(**d.to_json())
            rep.undecided |= bool(d.indeterminate)
    else:
        f = cd.findim_estimate(A, args.dim_bound, args.cutoff)
        rep.columns = ["findim_lower_bound", "id", "g_inf_k", "checks"]
        rep.add(**f.to_json())
        rep.undecided |= not f.ok


def cmd_grade(args, rep: RunReport) -> None:
    A = load_algebra(args)
    M = load_module(args, A)
    g, rg = hm.grades(M, args.cutoff)
    s = hm.sgrade(M, args.cutoff)
    rep.columns = ["module", "grade", "rgrade", "sgrade"]
    rep.add(module=list(M.dims), grade=str(g), rgrade=str(rg), sgrade=str(s))
    rep.undecided |= not (g.settled and rg.settled and s.settled)


def cmd_resolve(args, rep: RunReport) -> None:
    A = load_algebra(args)
    M = load_module(args, A)
    rep.columns = ["degree", "term", "syzygy"]
    if args.direction == "projective":
        R = hm.min_resolution(M, "projective", args.length)
        for i in range(args.length + 1):
            T = R.term(i)
            rep.add(degree=i, term=[A.quiver.vertices[g] for g in T.gens],
                    syzygy=list(R.syzygy(i + 1).dims))
            if R.done and i >= len(R.terms):
                break
    else:
        R = hm.min_resolution(M, "injective", args.length)
        for i in range(args.length + 1):
            rep.add(degree=i, term=[A.quiver.vertices[g] for g in R.generators(i)],
                    syzygy=list(R.cosyzygy(i + 1).dims))
            if R.done and i >= len(R.dual.terms):
                break


def cmd_tr(args, rep: RunReport) -> None:
    A = load_algebra(args)
    M = load_module(args, A)
    T = hm.transpose(M)
    rep.columns = ["module", "transpose"]
    rep.add(module=list(M.dims), transpose=list(T.dims),
            **({"text": print_module(T)} if args.json else {}))


def cmd_ext(args, rep: RunReport) -> None:
    A = load_algebra(args)
    M = load_module(args, A)
    degrees = [args.degree] if args.degree is not None else range(4)
    rep.columns = ["degree", "dims", "dim"]
    for i in degrees:
        E = hm.ext_against_algebra(M, i)
        rep.add(degree=i, dims=list(E.dims), dim=E.dim)


def cmd_approx(args, rep: RunReport) -> None:
    A = load_algebra(args)
    C = load_module(args, A)
    kind = args.kind
    if kind == "mapping-cone":
        res = ap.precover_3_4_2(C, args.n, args.cutoff)
    elif kind == "g":
        side = "precover" if args.side == "both" else args.side
        res = ap.g_approx(C, args.k, args.i, side, args.cutoff, dim_bound=args.dim_bound)
    elif kind == "coresolution":
        res = ap.coresolution_approx(C, args.i, args.side, args.cutoff)
    else:
        side = "precover" if args.side == "both" else args.side
        res = ap.cotorsion_approx(C, args.i, args.j, side, args.cutoff)
    rep.columns = ["sequence", "dims", "exact"]
    out = res.to_json()
    for name, s in out["sequences"].items():
        rep.add(sequence=name, dims=s["dims"], exact=s["exact"])
    for term, c in out["certificates"].items():
        rep.add(sequence=term, dims=c["class"], exact=c["value"])
    if args.trace:
        for t in res.trace:
            rep.add(sequence="trace", dims=t, exact="")
    rep.undecided |= any(c.value is None for c in res.certificates.values())
    rep.failed = not res.ok and not rep.undecided


def cmd_cotorsion(args, rep: RunReport) -> None:
    A = load_algebra(args)
    r = ap.verify_cotorsion_pair(A, (args.pair, args.i, args.j), cutoff=args.cutoff,
                                 extra_dim=args.extra_dim, dim_bound=args.dim_bound)
    rep.columns = ["pair", "ok", "exact", "modules", "listing", "violations"]
    rep.add(**{k: v for k, v in r.to_json().items() if k not in ("left", "right")})
    rep.undecided |= not r.exact


def cmd_explore(args, rep: RunReport) -> None:
    A = load_algebra(args)
    d = cd.l_sequence_estimate(A, args.max_i, args.dim_bound, args.scan)
    rep.columns = ["i", "l_i", "equal_to_next"]
    eq = {a for a, _ in d["equal_pairs"]}
    for i, l in d["sequence"]:
        rep.add(i=i, l_i="-" if l is None else l, equal_to_next=i in eq)
        rep.undecided |= l is None


def cmd_selftest(args, rep: RunReport) -> None:
    from .selftest import run_selftest
    results = run_selftest(args.seed, args.p or 101, args.only)
    rep.columns = ["criterion", "name", "passed"]
    for r in results:
        rep.add(**r.to_json())
        if not args.json:
            print(r.line(), file=sys.stderr)
    rep.failed = not all(r.passed for r in results)


COMMANDS = {"profile": cmd_profile, "check": cmd_check, "grade": cmd_grade,
            "resolve": cmd_resolve, "tr": cmd_tr, "ext": cmd_ext, "approx": cmd_approx,
            "cotorsion-verify": cmd_cotorsion, "explore-l": cmd_explore,
            "selftest": cmd_selftest}


def dispatch(args) -> RunReport:
    rep = RunReport(args.command, _config(args))
    settings.seed = args.seed
    COMMANDS[args.command](args, rep)
    return rep


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rep = dispatch(args)
    except (UsageError, FormatError, AlgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ap.HypothesisError as exc:
        print(f"hypothesis not satisfied: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except EnumerationInfeasible as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (ModuleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(rep.machine() if args.json else rep.human())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
