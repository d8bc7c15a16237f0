"""Command-line front end: ``branchlat <group> <verb> [options]``.

Exit codes: 0 on success, 2 on invalid input or a violated precondition,
3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .branching import BranchingQuery
from .classical import (SOLattice, SpLattice, is_o_standard, is_sp_standard,
                        parse_letter_column, psi_so)
from .diagrams import parse_diagram
from .errors import InconsistencyError, PreconditionError
from .gtpattern import (GTPattern, GTPoset, compose_chain,
                        decompose_levels, enumerate_patterns, pattern_type)
from .lattice import LatticeFamily, join, leq, meet, parse_column
from .straightening import (hibi_normal_form, initial_term, straighten_monomial,
                            straighten_pair, verify_degeneration)
from .tableaux import Chain, enumerate_tableaux, render_skew, shape_of

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 2, 3
SEED_ENV = "BRANCHLAT_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise PreconditionError(message)


def _emit(out, args, data, text: str):
    if args.json:
        out.write(json.dumps(data) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _cols(text: str, m: int):
    return [parse_column(part, m) for part in text.split("|") if part.strip()]


def _pair(text: str, m: int):
    parts = text.split(";")
    if len(parts) != 2:
        raise PreconditionError(f"--pair expects 'I;J', got {text!r}")
    return parse_column(parts[0], m), parse_column(parts[1], m)


def _family(args) -> LatticeFamily:
    return LatticeFamily(args.m, args.k, args.n)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise PreconditionError(f"{SEED_ENV}={env!r} is not an integer") from None


# ---------------------------------------------------------------- handlers

def cmd_branch(args, out):
    if args.group == "gl":
        q = BranchingQuery("GL", args.m, args.n, parse_diagram(args.outer), parse_diagram(args.inner))
    elif args.group == "sp":
        q = BranchingQuery("Sp", args.m, args.n, parse_diagram(args.outer), parse_diagram(args.inner))
    else:
        q = BranchingQuery("SO", args.p, args.q, parse_diagram(args.outer), parse_diagram(args.inner))
    mult = q.multiplicity()
    data = {"multiplicity": mult}
    lines = [f"multiplicity {mult}"]
    if args.list == "patterns":
        pats = q.patterns()
        data["items"] = [p.to_json() for p in pats]
        lines += [json.dumps(p.to_json()["rows"]) for p in pats]
    elif args.list == "tableaux":
        tabs = q.tableaux()
        data["items"] = [t.to_json() for t in tabs]
        lines += [repr(t) for t in tabs]
    _emit(out, args, data, "\n".join(lines))


def cmd_lattice(args, out):
    F = _family(args)
    if args.verb == "enumerate":
        elems = F.elements
        _emit(out, args, {"family": str(F), "size": len(elems), "items": [e.to_json() for e in elems]},
              "\n".join([f"{F}: {len(elems)} elements"] + [repr(e) for e in elems]))
        return
    I, J = _pair(args.pair, F.m)
    F.require(I)
    F.require(J)
    if args.verb == "leq":
        res = leq(I, J)
        _emit(out, args, {"leq": res}, str(res).lower())
    else:
        op = meet if args.verb == "meet" else join
        res = op(I, J, F)
        _emit(out, args, res.to_json(), repr(res))


def _poset(args) -> GTPoset:
    return GTPoset(args.m, args.n, args.k)


def cmd_patterns(args, out):
    P = _poset(args)
    if args.verb == "enumerate":
        pats = enumerate_patterns(P, parse_diagram(args.outer), parse_diagram(args.inner))
        _emit(out, args, {"count": len(pats), "items": [p.to_json() for p in pats]},
              "\n".join([f"{len(pats)} patterns"] + [json.dumps(p.to_json()["rows"]) for p in pats]))
    elif args.verb == "decompose":
        p = _parse_pattern(args.rows, P)
        chain = Chain(decompose_levels(p))
        _emit(out, args, {"chain": chain.to_json(), "type": pattern_type(p).to_json()},
              f"{chain!r}\ntype {pattern_type(p)}")
    else:
        F = P.family()
        cols = [F.require(c) for c in _cols(args.cols, P.m)]
        p = compose_chain(cols, P)
        _emit(out, args, p.to_json(), json.dumps(p.to_json()["rows"]))


def _parse_pattern(text: str, P: GTPoset) -> GTPattern:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        rows = [[int(x) for x in r.split(",")] for r in text.split("/")]
    if isinstance(rows, dict):
        return GTPattern.from_json(rows)
    return GTPattern(P, tuple(tuple(r) for r in rows))


def cmd_tableaux(args, out):
    F = _family(args)
    if args.verb == "enumerate":
        tabs = enumerate_tableaux(F, parse_diagram(args.outer), parse_diagram(args.inner))
        _emit(out, args, {"count": len(tabs), "items": [t.to_json() for t in tabs]},
              "\n".join([f"{len(tabs)} tableaux"] + [repr(t) for t in tabs]))
    else:
        t = Chain(tuple(F.require(c) for c in _cols(args.cols, F.m)))
        grid = render_skew(t, F.n)
        _emit(out, args, {"chain": t.to_json(), "shape": shape_of(t, F.n).to_json(), "grid": grid.split("\n")},
              f"shape {shape_of(t, F.n)}\n{grid}")


def cmd_straighten(args, out):
    F = _family(args)
    seed = _seed(args)
    if args.pair:
        I, J = _pair(args.pair, F.m)
        exp = straighten_pair(I, J, F, seed=seed)
        lead = initial_term(exp, args.base)
        data = exp.to_json()
        data["initial"] = lead.to_json()
        text = [f"delta{I!r} * delta{J!r} ="]
        text += [f"  {_signed(t.coeff)} delta{t.S!r} delta{t.T!r}" for t in exp.terms]
        text.append(f"initial term {lead.coeff} delta{lead.S!r} delta{lead.T!r}")
        _emit(out, args, data, "\n".join(text))
    else:
        cols = [F.require(c) for c in _cols(args.cols or "", F.m)]
        if not cols:
            raise PreconditionError("straighten needs --pair or --cols")
        res = straighten_monomial(cols, F, seed=seed)
        data = {"terms": [{"coeff": str(c), "chain": ch.to_json()} for c, ch in res]}
        text = "\n".join(f"{_signed(c)} {ch!r}" for c, ch in res)
        _emit(out, args, data, text)


def _signed(c) -> str:
    return f"+{c}" if c > 0 else str(c)


def cmd_verify(args, out):
    F = _family(args)
    if args.exhaustive == (args.trials is not None):
        raise PreconditionError("verify degeneration needs exactly one of --exhaustive or --trials")
    report = verify_degeneration(F, trials=args.trials, seed=_seed(args), base=args.base, jobs=args.jobs)
    _emit(out, args, report.to_json(), report.render_text())
    if not report.ok:
        raise InconsistencyError(f"{len(report.violations)} degeneration violations")


def cmd_hibi(args, out):
    F = _family(args)
    cols = [F.require(c) for c in _cols(args.cols, F.m)]
    chain = hibi_normal_form(cols, F)
    _emit(out, args, chain.to_json(), repr(chain))


def _letter_lattice(args):
    if args.group == "sp":
        if args.m is None or args.n is None:
            raise PreconditionError("--group sp needs --m and --n")
        return SpLattice(args.m, args.n)
    if args.p is None or args.q is None:
        raise PreconditionError("--group so needs --p and --q")
    return SOLattice(args.p, args.q)


def cmd_classical(args, out):
    if args.verb == "psi":
        p = args.p if args.p is not None else (2 * args.m if args.m is not None else None)
        if p is None:
            raise PreconditionError("psi needs --p (or --m for the symplectic alphabet)")
        col = parse_letter_column(args.col)
        rows = psi_so(col, p)
        _emit(out, args, {"column": col.to_json(), "rows": list(rows)}, ",".join(map(str, rows)))
    elif args.verb == "iso":
        L = _letter_lattice(args)
        col = parse_letter_column(args.col)
        img = L.to_gl(col)
        _emit(out, args, {"column": col.to_json(), "image": img.to_json(), "family": str(L.gl_family)},
              f"{img!r} in {L.gl_family}")
    else:
        t = [parse_letter_column(part) for part in args.cols.split("|") if part.strip()]
        if args.m is None:
            raise PreconditionError(f"{args.verb} needs --m")
        res = is_sp_standard(t, args.m) if args.verb == "sp-standard" else is_o_standard(t, args.m)
        _emit(out, args, {"standard": res}, str(res).lower())


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help=f"random seed (fallback: ${SEED_ENV}, then 0)")
    common.add_argument("--base", type=int, default=None, help="weight base N (> 2m; default 2m+1)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verification")

    parser = _Parser(prog="branchlat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def lattice_args(p, k_required=True):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--k", type=int, required=k_required)
        p.add_argument("--n", type=int, default=0)

    br = sub.add_parser("branch", help="branching multiplicities")
    brs = br.add_subparsers(dest="group", required=True, parser_class=_Parser)
    for g in ("gl", "sp"):
        p = brs.add_parser(g, parents=[common])
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
    p = brs.add_parser("so", parents=[common])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    for p in brs.choices.values():
        p.add_argument("--outer", required=True, help="F, comma-separated")
        p.add_argument("--inner", default="", help="D, comma-separated")
        p.add_argument("--list", choices=["patterns", "tableaux"], default=None)
        p.set_defaults(func=cmd_branch)

    la = sub.add_parser("lattice", help="the lattices L_{m,k}^n")
    las = la.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in ("enumerate", "meet", "join", "leq"):
        p = las.add_parser(verb, parents=[common])
        lattice_args(p)
        if verb != "enumerate":
            p.add_argument("--pair", required=True, help='"I;J", e.g. "1,2,5;1,3,4"')
        p.set_defaults(func=cmd_lattice)

    pa = sub.add_parser("patterns", help="GT patterns on truncated posets")
    pas = pa.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in ("enumerate", "decompose", "compose"):
        p = pas.add_parser(verb, parents=[common])
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--k", type=int, required=True)
        if verb == "enumerate":
            p.add_argument("--outer", required=True)
            p.add_argument("--inner", default="")
        elif verb == "decompose":
            p.add_argument("--rows", required=True, help='JSON rows top first, or "a,b/c,d/..."')
        else:
            p.add_argument("--cols", required=True, help='chain "I1|I2|..."')
        p.set_defaults(func=cmd_patterns)

    ta = sub.add_parser("tableaux", help="chains in L_{m,k}^n")
    tas = ta.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in ("enumerate", "render"):
        p = tas.add_parser(verb, parents=[common])
        lattice_args(p)
        if verb == "enumerate":
            p.add_argument("--outer", required=True)
            p.add_argument("--inner", default="")
        else:
            p.add_argument("--cols", required=True)
        p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("straighten", parents=[common], help="straighten products of minors")
    lattice_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair")
    g.add_argument("--cols")
    p.set_defaults(func=cmd_straighten)

    ve = sub.add_parser("verify", help="verification reports")
    ves = ve.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = ves.add_parser("degeneration", parents=[common])
    lattice_args(p)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    hi = sub.add_parser("hibi", help="Hibi algebra normal forms")
    his = hi.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = his.add_parser("nf", parents=[common])
    lattice_args(p)
    p.add_argument("--cols", required=True)
    p.set_defaults(func=cmd_hibi)

    cl = sub.add_parser("classical", help="Sp and SO letter columns")
    cls = cl.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in ("psi", "iso", "sp-standard", "o-standard"):
        p = cls.add_parser(verb, parents=[common])
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        if verb == "iso":
            p.add_argument("--group", choices=["sp", "so"], required=True)
        if verb in ("psi", "iso"):
            p.add_argument("--col", required=True, help='letters, e.g. "u1,v1"')
        else:
            p.add_argument("--cols", required=True, help='chain "u1,u2|v1,v2"')
        p.set_defaults(func=cmd_classical)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.jobs < 1:
            raise PreconditionError("--jobs must be at least 1")
        args.func(args, out)
    except (PreconditionError, ValueError) as exc:
        err.write(f"branchlat: error: {exc}\n")
        return EXIT_USAGE
    except InconsistencyError as exc:
        err.write(f"branchlat: inconsistency: {exc}\n")
        return EXIT_INCONSISTENT
    return EXIT_OK


def main() -> None:
    sys.exit(run())
