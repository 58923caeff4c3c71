"""Command-line entry point.

Exit codes: 0 pass, 1 law or verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import io
from .errors import BudgetExceeded, NovikovError
from .laws import (
    check_gd,
    classify_type,
    commutator,
    is_lie_algebra,
    is_lie_superalgebra,
    is_novikov_superalgebra,
    super_commutator,
)
from .modules import CATALOG, CatalogTag, catalog_instantiate, check_module_axioms
from .scalars import Field
from .search import SearchSpec, search
from .verify import SECTIONS, run_verify_paper


class UsageError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path):
    return io.parse(_read(path))


def _field(spec: str) -> Field:
    if spec in ("rational", "q", "QQ"):
        return Field.rational()
    kind, _, p = spec.partition(":")
    if kind != "gf" or not p.isdigit():
        raise UsageError(f"field must be 'rational' or 'gf:<p>', got {spec!r}")
    return Field.gf(int(p))


def _params(items):
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            out[key.strip()] = Fraction(value.strip())
        except ValueError:
            raise UsageError(f"bad parameter value {value!r}") from None
    return out


def cmd_check(args, out):
    report = is_novikov_superalgebra(_load(args.file))
    print(io.render_report(report, args.machine), file=out)
    return 0 if report.passed else 1


def cmd_type(args, out):
    A = _load(args.file)
    report = is_novikov_superalgebra(A)
    if not report.passed:
        print(io.render_report(report, args.machine), file=out)
        return 1
    kind = classify_type(A)
    print(f"record=type type={kind}" if args.machine else f"type {kind}", file=out)
    return 0


def cmd_slie(args, out):
    A = _load(args.file)
    if args.ungraded:
        B, symbol = commutator(A), "Lie"
        report = is_lie_algebra(B)
    else:
        B, symbol = super_commutator(A), "SLie"
        report = is_lie_superalgebra(B)
    if args.machine:
        for (i, j, k), v in sorted(B.nonzero_products().items()):
            print(f"record=bracket i={i} j={j} k={k} value={v.value}", file=out)
    else:
        print(f"{symbol} bracket table:", file=out)
        print(io.render_table(B, symbol="[,]"), file=out)
    print(io.render_report(report, args.machine), file=out)
    return 0 if report.passed else 1


def cmd_gd(args, out):
    A = _load(args.file)
    B = commutator(A) if args.ungraded else super_commutator(A)
    report = check_gd(A, B)
    print(io.render_report(report, args.machine), file=out)
    return 0 if report.passed else 1


def cmd_module_check(args, out):
    base = _load(args.algebra)
    M = io.parse_module(_read(args.module), base)
    report = check_module_axioms(base, M)
    print(io.render_report(report, args.machine), file=out)
    return 0 if report.passed else 1


def cmd_catalog(args, out):
    if args.action == "list":
        for name, row in CATALOG.items():
            params = ",".join(row["params"]) or "-"
            ee = "ee=e" if row["eps"] else "ee=0"
            if args.machine:
                print(f"record=tag tag={name} eps={row['eps']} params={params}", file=out)
            else:
                print(f"{name:4} {ee}  params: {params}", file=out)
        return 0
    if not args.tag:
        raise UsageError("catalog emit needs a tag, e.g. 'catalog emit T5 --param a=3'")
    tag = CatalogTag(args.tag, _params(args.param))
    _, M = catalog_instantiate(tag, _field(args.field))
    out.write(f"# catalog row {tag}\n")
    out.write(io.emit_module(M))
    return 0


def cmd_search(args, out):
    p = _field(args.field).p
    if p is None:
        raise UsageError("search needs a prime field, e.g. --field gf:3")
    spec = SearchSpec(
        args.d0,
        args.d1,
        p,
        mode="random" if args.random else "exhaustive",
        samples=args.random or 0,
        seed=args.seed,
        prune_odd_square=not args.no_prune,
        budget=args.budget,
        workers=args.workers,
    )
    try:
        report = search(spec)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    print(io.render_search(report, args.machine), file=out)
    return 1 if report.type_S else 0


def cmd_verify(args, out):
    if args.target != "paper":
        raise UsageError("only 'verify paper' is available")
    status, _ = run_verify_paper(
        skip=args.skip or (),
        completeness_gf3=args.completeness_gf3,
        out=out,
        machine=args.machine,
    )
    return status


def build_parser():
    parser = argparse.ArgumentParser(
        prog="novikov", description="Exact checks for Novikov superalgebras given by structure constants."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="line-oriented key=value output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Novikov superalgebra laws")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("type", parents=[common], help="type N or S")
    p.add_argument("file")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("slie", parents=[common], help="supercommutator bracket table")
    p.add_argument("file")
    p.add_argument("--ungraded", action="store_true", help="plain commutator uv - vu")
    p.set_defaults(func=cmd_slie)

    p = sub.add_parser("gd", parents=[common], help="Gel'fand-Dorfman compatibility with the supercommutator")
    p.add_argument("file")
    p.add_argument("--ungraded", action="store_true", help="use the plain commutator as bracket")
    p.set_defaults(func=cmd_gd)

    p = sub.add_parser("module-check", parents=[common], help="module axioms over a Novikov algebra")
    p.add_argument("algebra")
    p.add_argument("module")
    p.set_defaults(func=cmd_module_check)

    p = sub.add_parser("catalog", parents=[common], help="2-dim modules over 1-dim Novikov algebras")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("tag", nargs="?")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--field", default="rational", help="rational or gf:<p>")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("search", parents=[common], help="hunt for type-S algebras over GF(p)")
    p.add_argument("--d0", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--field", required=True, help="gf:<p>")
    p.add_argument("--random", type=int, metavar="N", help="sample N random tables instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="run the full verification suite")
    p.add_argument("target", choices=("paper",))
    p.add_argument("--skip", action="append", choices=SECTIONS + ("gf3",))
    p.add_argument("--completeness-gf3", action="store_true", help="also run catalog completeness over GF(3)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (UsageError, NovikovError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
