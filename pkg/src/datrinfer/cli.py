"""Command-line interface: ``datr check|query|dump|verify|infer|stats``.

Exit status is 0 on success, 1 when a query fails or a check does not hold,
and 2 for usage, file and syntax errors.  Data goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import criteria as crit
from .evaluator import DEFAULT_DEPTH_LIMIT, EvaluationError, dump, evaluate
from .model import Query, Ref
from .search import ConfigError, SearchConfig, infer
from .syntax import (
    DatrSyntaxError,
    parse_extensional,
    parse_queries,
    parse_query,
    parse_theory,
    print_extensional,
    print_theory,
)
from .verifier import ConflictingObservations, verify


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as err:
        raise UsageError(f"{path}: {err}") from None


def _theory(path: str):
    try:
        return parse_theory(_read(path))
    except DatrSyntaxError as err:
        raise UsageError(f"{path}: {err}") from None


def _data(path: str):
    try:
        return parse_extensional(_read(path))
    except DatrSyntaxError as err:
        raise UsageError(f"{path}: {err}") from None


def _write(path: Optional[str], text: str):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as err:
        raise UsageError(f"{path}: {err}") from None


def cmd_check(args) -> int:
    theory = _theory(args.theory)
    nodes = set(theory.nodes)
    for s in theory.sorted_sentences():
        for item in s.rhs:
            if isinstance(item, Ref) and item.node is not None and item.node not in nodes:
                print(f"warning: {s} refers to undefined node {item.node}", file=sys.stderr)
    print(f"{len(theory.nodes)} nodes, {len(theory)} sentences")
    return 0


def cmd_query(args) -> int:
    theory = _theory(args.theory)
    try:
        query = parse_query(args.query)
    except DatrSyntaxError as err:
        raise UsageError(f"query: {err}") from None
    try:
        value = evaluate(theory, query, args.depth_limit)
    except EvaluationError as err:
        print(f"{query}: no value ({err.reason} at {err.at})", file=sys.stderr)
        return 1
    print(" ".join(value) if len(value) == 1 else "(" + " ".join(value) + ")")
    return 0


def cmd_dump(args) -> int:
    theory = _theory(args.theory)
    queries: List[Query] = []
    if args.queries:
        try:
            queries = parse_queries(_read(args.queries))
        except DatrSyntaxError as err:
            raise UsageError(f"{args.queries}: {err}") from None
    if args.paths:
        try:
            paths = [parse_query(f"X:{p}").path for p in args.paths]
        except DatrSyntaxError as err:
            raise UsageError(f"--paths: {err}") from None
        for node in args.nodes or theory.nodes:
            queries.extend(Query(node, path) for path in paths)
    if not args.queries and not args.paths:
        raise UsageError("dump needs a query file or --paths")
    sentences, failures = dump(theory, queries, args.depth_limit)
    sys.stdout.write(print_extensional(sentences))
    for query, err in failures:
        print(f"failed: {query} ({err.reason} at {err.at})", file=sys.stderr)
    return 1 if failures else 0


def cmd_verify(args) -> int:
    report = verify(_theory(args.theory), _data(args.data), args.depth_limit)
    print(report)
    return 0 if report.ok else 1


def cmd_infer(args) -> int:
    data = _data(args.data)
    config = SearchConfig()
    if args.config:
        try:
            config = SearchConfig.from_text(_read(args.config))
        except ConfigError as err:
            raise UsageError(f"{args.config}: {err}") from None
    try:
        result = infer(data, config)
    except ConflictingObservations as err:
        raise UsageError(f"{args.data}: {err}") from None
    _write(args.out, print_theory(result.theory))
    if args.trace:
        _write(args.trace, result.trace_text)
    print(f"{len(result.theory)} sentences (initial {result.initial_size}); "
          f"consistent: {'yes' if result.report.consistent else 'no'}, "
          f"complete: {'yes' if result.report.complete else 'no'}", file=sys.stderr)
    return 0 if result.report.ok else 1


def cmd_stats(args) -> int:
    theory = _theory(args.theory)
    for name, function in crit.CRITERIA.items():
        print(f"{name}: {function(theory)}")
    for line in crit.hierarchy_lines(theory):
        print(f"hierarchy: {line}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="datr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "parse a theory and report undefined node references")
    p.add_argument("theory")

    p = add("query", cmd_query, "evaluate one query such as 'Love:<mor past>'")
    p.add_argument("theory")
    p.add_argument("query")

    p = add("dump", cmd_dump, "evaluate many queries and print extensional sentences")
    p.add_argument("theory")
    p.add_argument("queries", nargs="?", help="file of Node:<path> queries or .ext sentences")
    p.add_argument("--paths", nargs="+", metavar="PATH", help="paths like '<sing nom>'")
    p.add_argument("--nodes", nargs="+", metavar="NODE",
                   help="nodes to combine with --paths (default: all)")

    p = add("verify", cmd_verify, "check consistency and completeness against observations")
    p.add_argument("theory")
    p.add_argument("data")

    p = add("infer", cmd_infer, "induce a theory from observations")
    p.add_argument("data")
    p.add_argument("--config")
    p.add_argument("--out")
    p.add_argument("--trace")

    p = add("stats", cmd_stats, "print every criterion score and the node hierarchy")
    p.add_argument("theory")

    for name in ("query", "dump", "verify"):
        sub.choices[name].add_argument("--depth-limit", type=int, default=DEFAULT_DEPTH_LIMIT)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"datr: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
