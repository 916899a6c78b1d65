"""Command-line interface.

Subcommands:

* ``term``     one term of a sequence
* ``gen``      a contiguous run of terms
* ``verify``   run identity suites over seeded samples
* ``bench``    cross-check and time the evaluation methods
* ``catalog``  list the named sequences

All numeric input is exact -- integers or ``p/q`` literals, never decimals --
and rationals render losslessly as ``num/den`` (``/den`` omitted when the
value is an integer).  Exit codes: 0 success, 1 verification or cross-check
failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from statistics import median

from .catalog import UnknownSequenceError, entries, extra_entries, lookup
from .core import Params, SequenceKind, table_notation, term_range
from .exact import OpCounter, parse_rational
from .fastpath import Method, term_fast
from .identities import Family, SuiteConfig, SuiteSummary, run_suite

__all__ = ["main", "run", "build_parser"]

_NAIVE_INDEX_CAP = 10_000_000

_SUITES: dict[str, tuple[Family, ...]] = {
    "all": tuple(Family),
    "l1": (Family.L1,),
    "l2": (Family.L2,),
    "sum": (Family.SUM,),
    "binom": (Family.BINOM,),
    "cassini": (Family.CASSINI_W,),
    "addition": (Family.ADDITION,),
    "catalan": (Family.CATALAN,),
    "prodsum": (Family.PRODSUM, Family.COR31, Family.T34),
}


class CliError(Exception):
    """A usage or parameter problem; mapped to exit code 2."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index_list(text: str) -> list[int]:
    pieces = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not pieces:
        raise argparse.ArgumentTypeError("empty index list")
    return [_positive_int(piece) for piece in pieces]


def _method_list(text: str) -> list[Method]:
    pieces = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not pieces:
        raise argparse.ArgumentTypeError("empty method list")
    methods = []
    for piece in pieces:
        try:
            methods.append(Method(piece))
        except ValueError:
            valid = ", ".join(m.value for m in Method)
            raise argparse.ArgumentTypeError(
                f"unknown method {piece!r} (valid: {valid})"
            ) from None
    return methods


def _add_sequence_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seq", help="catalog name, e.g. fibonacci or k-fibonacci(3)")
    parser.add_argument("--a", type=_rational, help="even-index coefficient (nonzero)")
    parser.add_argument("--b", type=_rational, help="odd-index coefficient (nonzero)")
    parser.add_argument("--c", type=_rational, help="second-order coefficient (nonzero)")
    parser.add_argument("--w0", type=_rational, help="w-kind initial term at index 0")
    parser.add_argument("--w1", type=_rational, help="w-kind initial term at index 1")
    parser.add_argument(
        "--kind",
        choices=[k.value for k in SequenceKind],
        help="initial-value convention (default: w, or the catalog entry's kind)",
    )


def _resolve_sequence(args: argparse.Namespace) -> tuple[Params, SequenceKind]:
    explicit = (args.a, args.b, args.c)
    if args.seq:
        if any(value is not None for value in explicit):
            raise CliError("give either --seq or explicit --a/--b/--c, not both")
        try:
            named = lookup(args.seq)
        except UnknownSequenceError as exc:
            raise CliError(str(exc)) from None
        kind = SequenceKind(args.kind) if args.kind else named.kind
        return named.params, kind
    if any(value is None for value in explicit):
        raise CliError("provide --seq NAME or all of --a, --b, --c")
    try:
        params = Params(
            args.a,
            args.b,
            args.c,
            args.w0 if args.w0 is not None else 0,
            args.w1 if args.w1 is not None else 1,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    kind = SequenceKind(args.kind) if args.kind else SequenceKind.W
    return params, kind


def cmd_term(args: argparse.Namespace) -> int:
    params, kind = _resolve_sequence(args)
    value = term_fast(params, kind, args.index, Method(args.method))
    if args.format == "json":
        print(json.dumps({"n": args.index, "value": str(value)}))
    elif args.format == "csv":
        print("n,value")
        print(f"{args.index},{value}")
    else:
        print(value)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    params, kind = _resolve_sequence(args)
    if args.start > args.stop:
        raise CliError("--from must not exceed --to")
    values = term_range(params, kind, args.start, args.stop)
    rows = list(zip(range(args.start, args.stop + 1), values))
    if args.format == "json":
        text = json.dumps([{"n": n, "value": str(v)} for n, v in rows])
    elif args.format == "plain":
        text = "\n".join(f"{n}\t{v}" for n, v in rows)
    else:
        text = "n,value\n" + "\n".join(f"{n},{v}" for n, v in rows)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text + "\n")
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc}") from None
    else:
        print(text)
    return 0


def _print_plain_verify(summary: SuiteSummary, suite: str) -> None:
    print(f"suite={suite} seed={summary.seed} samples={summary.samples}")
    buckets: dict[str, list[int]] = {}
    for report in summary.results:
        bucket = buckets.setdefault(str(report.id), [0, 0])
        bucket[1] += 1
        if report.passed:
            bucket[0] += 1
    for name, (ok, total) in buckets.items():
        marker = "ok" if ok == total else "FAIL"
        print(f"  {name:<12} {ok}/{total} passed  [{marker}]")
    skip_counts: dict[tuple[str, str], int] = {}
    for record in summary.skipped:
        key = (str(record.id), record.reason)
        skip_counts[key] = skip_counts.get(key, 0) + 1
    for (name, reason), count in sorted(skip_counts.items()):
        print(f"  skipped {name} x{count}: {reason}")
    mismatch_counts: dict[str, list[int]] = {}
    for report in summary.results:
        if report.printed_form_matches is None:
            continue
        bucket = mismatch_counts.setdefault(str(report.id), [0, 0])
        bucket[1] += 1
        if not report.printed_form_matches:
            bucket[0] += 1
    for name, (bad, total) in sorted(mismatch_counts.items()):
        if bad:
            print(
                f"  warning: printed-form mismatch for {name} in {bad}/{total} checks "
                "(simplified constant; informational only)"
            )
    print(f"passed={summary.passed} failed={summary.failed} skipped={len(summary.skipped)}")


def cmd_verify(args: argparse.Namespace) -> int:
    config = SuiteConfig(
        families=_SUITES[args.suite],
        samples=args.samples,
        seed=args.seed,
        max_index=args.max_index,
    )
    summary = run_suite(config)
    if args.report == "json":
        payload = summary.to_dict()
        payload["suite"] = args.suite
        print(json.dumps(payload))
    else:
        _print_plain_verify(summary, args.suite)
    return 1 if summary.failed else 0


def cmd_bench(args: argparse.Namespace) -> int:
    params, kind = _resolve_sequence(args)
    methods = args.methods
    if Method.NAIVE in methods and any(n > _NAIVE_INDEX_CAP for n in args.n_list):
        raise CliError(
            f"the naive method is linear-time; refusing n > {_NAIVE_INDEX_CAP}"
        )
    rows = []
    for n in args.n_list:
        seen: dict[Method, object] = {}
        for method in methods:
            counter = OpCounter()
            times = []
            start = time.perf_counter()
            value = term_fast(params, kind, n, method, counter)
            times.append(time.perf_counter() - start)
            for _ in range(args.repeat - 1):
                start = time.perf_counter()
                term_fast(params, kind, n, method)
                times.append(time.perf_counter() - start)
            seen[method] = value
            rows.append(
                {
                    "method": method.value,
                    "n": n,
                    "muls": counter.muls,
                    "seconds": median(times),
                }
            )
        if len(set(seen.values())) > 1:
            print(f"error: methods disagree at n={n}", file=sys.stderr)
            return 1
    if args.format == "json":
        print(
            json.dumps(
                {
                    "sequence": table_notation(params),
                    "kind": kind.value,
                    "repeat": args.repeat,
                    "results": rows,
                }
            )
        )
    else:
        print(f"sequence {table_notation(params)} kind={kind.value} repeat={args.repeat}")
        print(f"{'method':<10} {'n':>10} {'muls':>12} {'seconds':>12}")
        for row in rows:
            print(
                f"{row['method']:<10} {row['n']:>10} {row['muls']:>12} "
                f"{row['seconds']:>12.6f}"
            )
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    def describe(entry):
        name = entry.key
        if entry.arg_names:
            name += f"({','.join(entry.arg_names)})"
        return {
            "name": name,
            "notation": entry.notation,
            "kind": entry.kind.value,
            "display_name": entry.display_name,
        }

    rows = [describe(e) for e in entries()]
    extras = [describe(e) for e in extra_entries()]
    if args.format == "json":
        print(json.dumps({"entries": rows, "extra": extras}))
        return 0
    for row in rows:
        print(
            f"{row['name']:<42} {row['notation']:<22} kind={row['kind']}  "
            f"{row['display_name']}"
        )
    print("extra lookup-only keys:")
    for row in extras:
        print(
            f"{row['name']:<42} {row['notation']:<22} kind={row['kind']}  "
            f"{row['display_name']}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biperiodic",
        description="Exact evaluation and identity verification for bi-periodic "
        "Horadam sequences.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    term = commands.add_parser("term", help="print one term")
    _add_sequence_args(term)
    term.add_argument("-n", "--index", type=int, required=True, help="term index (any integer)")
    term.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.DOUBLING.value,
        help="evaluation strategy (default: doubling)",
    )
    term.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    term.set_defaults(handler=cmd_term)

    gen = commands.add_parser("gen", help="print a run of terms")
    _add_sequence_args(gen)
    gen.add_argument("--from", dest="start", type=int, required=True, help="first index")
    gen.add_argument("--to", dest="stop", type=int, required=True, help="last index (inclusive)")
    gen.add_argument("--format", choices=["csv", "json", "plain"], default="csv")
    gen.add_argument("--out", help="write to this file instead of stdout")
    gen.set_defaults(handler=cmd_gen)

    verify = commands.add_parser("verify", help="verify identity families")
    verify.add_argument("--suite", choices=sorted(_SUITES), default="all")
    verify.add_argument("--samples", type=_positive_int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-index", type=_positive_int, default=8)
    verify.add_argument("--report", choices=["plain", "json"], default="plain")
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="cross-check and time the methods")
    _add_sequence_args(bench)
    bench.add_argument(
        "--n-list",
        type=_index_list,
        required=True,
        help="comma-separated indices, all >= 1",
    )
    bench.add_argument(
        "--methods",
        type=_method_list,
        default=[Method.MATRIX, Method.DOUBLING],
        help="comma-separated subset of naive,matrix,doubling",
    )
    bench.add_argument("--repeat", type=_positive_int, default=1)
    bench.add_argument("--format", choices=["plain", "json"], default="plain")
    bench.set_defaults(handler=cmd_bench)

    catalog = commands.add_parser("catalog", help="list named sequences")
    catalog.add_argument("action", choices=["list"])
    catalog.add_argument("--format", choices=["plain", "json"], default="plain")
    catalog.set_defaults(handler=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
