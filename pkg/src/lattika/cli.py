"""Command-line entry point: ``lattika {check,classes,enumerate,verify,mine}``.

Exit codes: 0 success / property holds, 1 property false / violations /
counterexample found, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .classes import uniform_dimension
from .core import LatticeError, SizeLimitExceeded, enumerate_cap, finite_length
from .elements import element_class_table
from .enumerate import enumerate_lattices, enumerate_up_to
from .expr import evaluate, parse_class, parse_property
from .fixtures import FIXTURES
from .io import Corpus, export_corpus, load_corpus, make_corpus, read_lattice

GRAMMAR = """\
class expressions:
  all | simple | uniform | udim | compactcls | flen | zero | file(PATH)
  | e(X) | dsum(X) | sum(X,Y,...) | prod(X,Y,...) | pow(X,n)
property expressions:
  extending | qc | indecomposable | uniform | udim | modular | idiom
  | distributive | dsubc | true | false
  | type1(X) | type2(X) | wtype1(X) | wtype2(X) | Q(X) | C1(X) | C3(X) | xqc(X)
  | CLASS (membership of the whole lattice)
  combined with not / and / or and parentheses
"""


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def cmd_check(args) -> int:
    L = read_lattice(args.file, strict=not args.reduce)
    verdict = evaluate(parse_property(args.prop), L)
    if args.json:
        print(json.dumps(verdict.to_dict(L)))
    else:
        print(verdict.describe(L))
    return 0 if verdict.holds else 1


def cmd_classes(args) -> int:
    L = read_lattice(args.file, strict=not args.reduce)
    table = element_class_table(L).to_dict()
    table["udim"] = uniform_dimension(L)
    table["length"] = finite_length(L)
    if args.json:
        print(json.dumps(table))
        return 0
    fmt = lambda xs: "{" + ",".join(xs) + "}"  # noqa: E731
    for key in ("E", "C", "D"):
        print(f"{key} = {fmt(table[key])}")
    for a, ps in table["P"].items():
        print(f"P({a}) = {fmt(ps)}")
    print(f"uniform dimension = {table['udim']}")
    print(f"length = {table['length']}")
    return 0


def cmd_enumerate(args) -> int:
    filt = None
    if args.filter:
        node = parse_property(args.filter)
        filt = lambda L: evaluate(node, L).holds  # noqa: E731
    corpus = enumerate_lattices(args.n, filt)
    if args.out:
        export_corpus(corpus, args.out)
    print(len(corpus))
    return 0


def _fixture_corpus() -> Corpus:
    return make_corpus("fixtures", [(make(), name) for name, make in FIXTURES.items()])


def _verify_corpus(args) -> Corpus:
    if args.enumerate is not None:
        return enumerate_up_to(args.enumerate)
    path = Path(args.corpus)
    if not path.exists() and args.corpus == "fixtures":
        return _fixture_corpus()
    if not path.is_dir():
        raise LatticeError(f"corpus directory not found: {args.corpus}")
    corpus = load_corpus(path, strict=not args.reduce)
    for name, err in corpus.errors:
        logging.warning("skipping %s: %s", name, err)
    return corpus


def cmd_verify(args) -> int:
    from .harness.runner import emit_report, run_suite

    corpus = _verify_corpus(args)
    bindings = [parse_class(b) for b in args.bind]
    report = run_suite(corpus, args.checks, bindings, jobs=args.jobs)
    print(emit_report(report, "json" if args.json else "text", timing=args.timing))
    return report.exit_code


def cmd_mine(args) -> int:
    from .harness.miner import find_counterexample

    if args.max_n > enumerate_cap():
        raise SizeLimitExceeded(f"max-n is capped at {enumerate_cap()} (LATTIKA_MAX_N)")
    result = find_counterexample(args.hyp, args.not_concl, args.max_n)
    print(json.dumps(result.to_dict()) if args.json else result.describe())
    return 1 if result.found else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lattika",
        description="Finite lattice toolkit: extending properties and a check suite.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def lattice_cmd(name, help):
        sp = sub.add_parser(name, help=help, epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("file", help="lattice JSON file")
        sp.add_argument("--reduce", action="store_true", help="accept and drop non-cover pairs")
        sp.add_argument("--json", action="store_true")
        return sp

    sp = lattice_cmd("check", "evaluate a property expression on one lattice")
    sp.add_argument("--prop", required=True, help="property expression")
    sp.set_defaults(func=cmd_check)

    sp = lattice_cmd("classes", "print E, C, D and pseudocomplements")
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("enumerate", help="count (and export) lattices of one size")
    sp.add_argument("n", type=int)
    sp.add_argument("--filter", help="property expression to keep")
    sp.add_argument("--out", help="directory to write <n>-<hash>.json files")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run registered checks over a corpus")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", help="directory of lattice files (or 'fixtures')")
    src.add_argument("--enumerate", type=int, metavar="N", help="all lattices with n <= N")
    sp.add_argument("--checks", default="all", help="comma separated ids or 'all'")
    sp.add_argument("--bind", action="append", default=[], help="extra class binding")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall times")
    sp.add_argument("--reduce", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mine", help="smallest lattice satisfying hyp and not-concl")
    sp.add_argument("--hyp", required=True)
    sp.add_argument("--not-concl", required=True)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_mine)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LatticeError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
