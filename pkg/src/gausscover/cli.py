"""Command-line front end.

Exit status: 0 on success, 1 when a precondition of the requested operation
fails, 2 on usage errors or unparsable input.
"""
from __future__ import annotations

import argparse
import sys

from . import arithmetic, construct, invariants, moves
from .diagram import GaussDiagram, parse_diagram, serialize_diagram
from .errors import GaussCoverError
from .polynomial import LaurentPolynomial, parse_polynomial


class InputError(Exception):
    """Unreadable or malformed input; reported with exit status 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _diagram(path: str) -> GaussDiagram:
    try:
        return parse_diagram(_read_text(path))
    except GaussCoverError as exc:
        raise InputError(f"{path}: {exc}") from None


def _poly(text: str) -> LaurentPolynomial:
    try:
        return parse_polynomial(text)
    except GaussCoverError as exc:
        raise InputError(str(exc)) from None


def _sign(text: str) -> int:
    if text not in ("+", "-"):
        raise argparse.ArgumentTypeError("sign must be + or -")
    return 1 if text == "+" else -1


def cmd_parse(args, out):
    out.write(serialize_diagram(_diagram(args.file)))


def cmd_index(args, out):
    g = _diagram(args.file).canonical()
    for c, i in sorted(invariants.indices(g).items()):
        out.write(f"{c} {i}\n")


def cmd_writhe(args, out):
    g = _diagram(args.file)
    vec = " ".join(f"{n}:{w}" for n, w in invariants.writhe_vector(g).items())
    poly = str(invariants.writhe_polynomial(g))
    out.write(f"vector {vec}".rstrip() + "\n")
    out.write(f"polynomial {poly}".rstrip() + "\n")
    out.write(f"odd {invariants.odd_writhe(g)}\n")


def cmd_cover(args, out):
    out.write(serialize_diagram(invariants.covering(_diagram(args.file), args.r)))


def cmd_simplify(args, out):
    out.write(serialize_diagram(moves.simplify(_diagram(args.file))))


def cmd_walk(args, out):
    g = _diagram(args.file)
    out.write(serialize_diagram(moves.random_move_walk(g, args.steps, args.seed, args.max_chords)))


def cmd_tables(args, out):
    if args.fn is not None:
        out.write(arithmetic.format_table(arithmetic.f_table(args.fn)))
    elif args.gn is not None:
        out.write(arithmetic.format_table(arithmetic.g_table(args.gn)))
    elif args.mobius is not None:
        if args.mobius < 1:
            raise GaussCoverError("--mobius needs N >= 1")
        for i in range(1, args.mobius + 1):
            out.write(f"{i} {arithmetic.mobius(i)}\n")
    else:
        if args.verify < 2:
            raise GaussCoverError("--verify needs NMAX >= 2")
        rep = arithmetic.verify_tables(args.verify)
        out.write(f"{rep}\n")
        if not rep.ok:
            return 1
    return 0


def cmd_snail(args, out):
    out.write(serialize_diagram(construct.snail(args.n, args.s)))


def cmd_realize(args, out):
    f = _poly(args.poly) if args.poly is not None else None
    if args.zero is not None:
        g = construct.realize_zero_covering(_diagram(args.files[0]), args.zero)
    elif args.single is not None:
        g = construct.realize_single_covering(_diagram(args.files[0]), args.single)
    elif args.writhe is not None:
        g = construct.adjust_writhe(_diagram(args.files[0]), _poly(args.writhe))
    elif args.spectrum:
        g = construct.realize_spectrum([_diagram(p) for p in args.files], f)
    else:
        g = construct.realize_spectrum_closed([_diagram(p) for p in args.files], f)
    out.write(serialize_diagram(g))


def cmd_check_poly(args, out):
    msg = invariants.realizability_failure(_poly(args.poly))
    if msg is not None:
        raise GaussCoverError(f"not realizable: {msg}")
    out.write("realizable\n")


def cmd_equiv(args, out):
    v = moves.equivalent_bounded(_diagram(args.a), _diagram(args.b), args.depth)
    if v.verdict is moves.Verdict.DISTINCT:
        # the zero polynomial prints as the empty string
        a, b = (str(x) or "0" for x in v.values)
        out.write(f"distinct {v.invariant}: {a} | {b}\n")
    else:
        out.write(f"{v.verdict.value}\n")
        out.write(moves.format_moves(v.moves))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gausscover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = with_file("parse", cmd_parse, "validate and canonicalize a diagram")
    sp.add_argument("file", nargs="?", default="-")
    sp = with_file("index", cmd_index, "per-chord indices (canonical labels)")
    sp.add_argument("file", nargs="?", default="-")
    sp = with_file("writhe", cmd_writhe, "n-writhes, writhe polynomial and odd writhe")
    sp.add_argument("file", nargs="?", default="-")
    sp = with_file("cover", cmd_cover, "r-covering")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("file", nargs="?", default="-")
    sp = with_file("simplify", cmd_simplify, "greedy R1/R2 simplification")
    sp.add_argument("file", nargs="?", default="-")
    sp = with_file("walk", cmd_walk, "random Reidemeister move walk")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--max-chords", type=int, default=None)
    sp.add_argument("file", nargs="?", default="-")

    sp = with_file("tables", cmd_tables, "f_n, g_n, Mobius values, table verification")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--fn", type=int, metavar="N")
    grp.add_argument("--gn", type=int, metavar="N")
    grp.add_argument("--mobius", type=int, metavar="N")
    grp.add_argument("--verify", type=int, metavar="NMAX")

    sp = with_file("snail", cmd_snail, "the (n, sign)-snail")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-s", type=_sign, required=True, metavar="+|-")

    sp = with_file("realize", cmd_realize, "covering and writhe constructions")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--zero", type=int, metavar="N", help="0-covering construction with parameter N")
    grp.add_argument("--single", type=int, metavar="N", help="single N-covering construction")
    grp.add_argument("--writhe", metavar="POLY", help="append snails to reach writhe polynomial POLY")
    grp.add_argument("--spectrum", action="store_true", help="FILES are J0 J2 ... Jm (linear)")
    grp.add_argument("--closed", action="store_true", help="FILES are J0 J2 ... Jm (circular)")
    sp.add_argument("--poly", metavar="POLY", help="target writhe polynomial for --spectrum/--closed")
    sp.add_argument("files", nargs="*", default=["-"])

    sp = with_file("check-poly", cmd_check_poly, "is POLY a writhe polynomial?")
    sp.add_argument("poly", metavar="POLY")

    sp = with_file("equiv", cmd_equiv, "bounded equivalence search")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("a")
    sp.add_argument("b")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "realize":
        single_input = args.zero is not None or args.single is not None or args.writhe is not None
        if single_input and len(args.files) != 1:
            err.write("gausscover: error: this construction takes exactly one input file\n")
            return 2
    try:
        status = args.func(args, out)
    except InputError as exc:
        err.write(f"gausscover: error: {exc}\n")
        return 2
    except GaussCoverError as exc:
        err.write(f"gausscover: {exc}\n")
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
