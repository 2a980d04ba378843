"""Command-line front end.

Verbs: os, compare, classify, psi, product, poset, verify, catalog, fixtures.
Exit codes: 0 ok, 1 user error, 2 construction failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .cache import cache_get, cache_put
from .classify import classify_group
from .construct import CATALOG_PARAMETRIZED, ConstructionError, catalog, catalog_names
from .expr import ParseError, build, parse, print_expr
from .finite_field import FieldError
from .fixtures import FixtureError, corpus_for_order, default_fixtures, load_fixtures
from .groups import GroupError
from .order_sequence import (
    SequenceError,
    compare,
    format_sequence,
    os_of_group,
    os_product,
    psi,
)
from .poset import Corpus, CorpusEntry, build_poset, to_csv, to_dot
from .verify import SUITE_NAMES, SuiteUsageError, run_suite

USER_ERROR, CONSTRUCTION_ERROR, VERIFICATION_ERROR = 1, 2, 3


class VerificationFailure(Exception):
    pass


def _features(args):
    return frozenset(getattr(args, "features", None) or ())


def _build_expr(text, features):
    node = parse(text)
    return print_expr(node), build(node, features)


def _fixtures(args):
    if getattr(args, "fixtures", None):
        return load_fixtures(args.fixtures)
    return default_fixtures()


def cmd_os(args):
    features = _features(args)
    key = print_expr(parse(args.expr))
    cached = cache_get(args.cache, key) if args.cache else None
    if cached is not None and not args.check_cache:
        print(cached)
        return 0
    text = format_sequence(os_of_group(build(parse(args.expr), features)))
    if cached is not None and cached != text:
        print(f"cache mismatch for {key!r}: cached {cached!r}, computed {text!r}", file=sys.stderr)
        return VERIFICATION_ERROR
    if args.cache and cached is None:
        cache_put(args.cache, key, text)
    print(text)
    return 0


def cmd_compare(args):
    features = _features(args)
    _, g1 = _build_expr(args.expr1, features)
    _, g2 = _build_expr(args.expr2, features)
    print(compare(os_of_group(g1), os_of_group(g2)).value)
    return 0


def cmd_classify(args):
    _, g = _build_expr(args.expr, _features(args))
    report = classify_group(g)
    print(f"order: {report.order}")
    print(f"nilpotent: {report.nilpotent}")
    print(f"supersolvable: {report.supersolvable}")
    print(f"solvable: {report.solvable}")
    if report.chain is not None:
        print("chain of prime-order normal subgroups: " + " > ".join(map(str, report.chain)))
    print("derived series orders: " + " > ".join(map(str, report.derived_orders)))
    return 0


def cmd_psi(args):
    _, g = _build_expr(args.expr, _features(args))
    print(psi(os_of_group(g)))
    return 0


def cmd_product(args):
    features = _features(args)
    _, g1 = _build_expr(args.expr1, features)
    _, g2 = _build_expr(args.expr2, features)
    print(format_sequence(os_product(os_of_group(g1), os_of_group(g2))))
    return 0


def cmd_poset(args):
    features = _features(args)
    if args.exprs:
        entries = []
        for text in args.exprs:
            label, grp = _build_expr(text, features)
            entries.append(CorpusEntry(label, os_of_group(grp)))
        corpus = Corpus(entries)
    else:
        if args.order is None:
            raise SuiteUsageError("poset over a fixture file needs --order")
        corpus = corpus_for_order(_fixtures(args), args.order)
        if not len(corpus):
            raise SuiteUsageError(f"no fixtures of order {args.order}")
    result = build_poset(corpus)
    if args.emit == "dot":
        out = to_dot(result)
    elif args.emit == "csv":
        out = to_csv(result)
    else:
        lines = ["labels: " + ", ".join(result.labels)]
        lines.append("minimal: " + ", ".join(sorted(result.minimal)))
        lines.append("maximal: " + ", ".join(sorted(result.maximal)))
        for top, low in result.hasse:
            lines.append(f"{top} covers {low}")
        out = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(out)
    else:
        print(out, end="")
    return 0


def cmd_verify(args):
    primes = tuple(int(p) for p in args.primes.split(",")) if args.primes else None
    checks = run_suite(args.suite, fixtures=_fixtures(args), primes=primes, features=_features(args))
    failed = 0
    for check in checks:
        status = "PASS" if check.ok else "FAIL"
        detail = f"  [{check.detail}]" if check.detail else ""
        print(f"{status} {check.name}{detail}")
        failed += 0 if check.ok else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return VERIFICATION_ERROR if failed else 0


def cmd_catalog(args):
    if not args.name:
        for name in catalog_names():
            suffix = " (takes a prime)" if name in CATALOG_PARAMETRIZED else ""
            print(f"{name}{suffix}")
        return 0
    if args.name not in catalog_names():
        print(f"error: unknown catalog name {args.name!r}", file=sys.stderr)
        return USER_ERROR
    grp = catalog(args.name, args.prime)
    print(f"order: {len(grp)}")
    print(format_sequence(os_of_group(grp)))
    return 0


def cmd_fixtures(args):
    fixtures = _fixtures(args)
    by_order = {}
    for f in fixtures:
        by_order.setdefault(f.n, []).append(f.label)
    print(f"{len(fixtures)} fixtures loaded")
    for n in sorted(by_order):
        print(f"order {n}: {', '.join(by_order[n])}")
    return 0


def _parser():
    parser = argparse.ArgumentParser(prog="oseq", description="Order-sequence calculus for finite groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--features", action="append", choices=["sz8"], help="enable optional features")
        return p

    p = add("os", cmd_os, help="order sequence of an expression")
    p.add_argument("expr")
    p.add_argument("--cache", help="flat-file cache path")
    p.add_argument("--check-cache", action="store_true", help="recompute and verify cached entries")

    p = add("compare", cmd_compare, help="domination verdict for two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = add("classify", cmd_classify, help="nilpotent / supersolvable / solvable report")
    p.add_argument("expr")

    p = add("psi", cmd_psi, help="sum of element orders")
    p.add_argument("expr")

    p = add("product", cmd_product, help="sequence product of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = add("poset", cmd_poset, help="domination poset over expressions or fixtures")
    p.add_argument("exprs", nargs="*")
    p.add_argument("--fixtures", help="fixture file (defaults to the shipped one)")
    p.add_argument("--order", type=int, help="select fixtures of this order")
    p.add_argument("--emit", choices=["text", "dot", "csv"], default="text")
    p.add_argument("--out", help="write output to a file instead of stdout")

    p = add("verify", cmd_verify, help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--fixtures", help="fixture file (defaults to the shipped one)")
    p.add_argument("--primes", help="comma-separated prime sample")

    p = add("catalog", cmd_catalog, help="list catalog names or build one entry")
    p.add_argument("name", nargs="?")
    p.add_argument("--prime", type=int)

    p = add("fixtures", cmd_fixtures, help="load and summarise a fixture file")
    p.add_argument("--fixtures", help="fixture file (defaults to the shipped one)")
    return parser


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, SequenceError, SuiteUsageError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR
    except ConstructionError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return CONSTRUCTION_ERROR
    except (GroupError, FieldError) as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return CONSTRUCTION_ERROR


if __name__ == "__main__":
    sys.exit(main())
