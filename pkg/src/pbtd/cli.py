"""Command line: ``pbtd verify | search | table1 | convert``.

Exit codes: 0 valid/found, 1 invalid/not found/exhausted, 2 usage, parse or
configuration error. Designs and reports go to stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from pbtd.errors import ConfigError, ParseError
from pbtd.io import emit_structured, emit_text, parse_structured, parse_text, table1
from pbtd.search import (
    SearchConfig,
    Status,
    anneal_search,
    backtrack_search,
    count_solutions,
    portfolio_search,
)
from pbtd.verify import verify

TIMEOUT_ENV = "PBTD_SEARCH_TIMEOUT"
DEFAULT_TIMEOUT = 60.0

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

PARSERS = {"text": parse_text, "structured": parse_structured}
EMITTERS = {"text": emit_text, "structured": emit_structured}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _default_timeout() -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw is None:
        return DEFAULT_TIMEOUT
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{TIMEOUT_ENV} must be a number of seconds, got {raw!r}")
    if value <= 0:
        raise ConfigError(f"{TIMEOUT_ENV} must be positive, got {raw!r}")
    return value


def cmd_verify(args) -> int:
    design = PARSERS[args.format](_read_input(args.path))
    report = verify(design)
    if args.report == "machine":
        sys.stdout.write(json.dumps(report.as_record(), separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(report.format_text())
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_table1(args) -> int:
    sys.stdout.write(EMITTERS[args.format](table1()))
    return EXIT_OK


def cmd_convert(args) -> int:
    design = PARSERS[args.source_format](_read_input(args.path))
    sys.stdout.write(EMITTERS[args.to](design))
    return EXIT_OK


def cmd_search(args) -> int:
    if args.n < 1:
        raise ConfigError(f"side must be positive, got {args.n}")
    timeout = None if args.no_timeout else (args.timeout if args.timeout is not None else _default_timeout())
    config = SearchConfig(
        engine=args.engine,
        seed=args.seed,
        time_budget=timeout,
        symmetry_break=args.symmetry_break,
        solution_limit=args.limit,
    )

    if args.count:
        if args.engine != "backtrack":
            raise ConfigError("--count needs the complete engine (--engine backtrack)")
        count, complete = count_solutions(args.n, config)
        state = "complete" if complete else "incomplete"
        noun = "solution" if count == 1 else "solutions"
        print(f"{count} {noun}, search {state}")
        return EXIT_OK if count > 0 else EXIT_NEGATIVE

    if args.portfolio:
        if args.engine != "anneal":
            raise ConfigError("--portfolio runs annealers (--engine anneal)")
        seeds = range(args.seed, args.seed + args.portfolio)
        outcome = portfolio_search(args.n, config, seeds)
    elif args.engine == "anneal":
        outcome = anneal_search(args.n, config)
    else:
        outcome = backtrack_search(args.n, config)

    st = outcome.stats
    print(
        f"status={outcome.status.value} nodes={st.nodes} moves={st.moves} "
        f"restarts={st.restarts} elapsed={st.elapsed:.3f}s",
        file=sys.stderr,
    )
    if outcome.status is Status.FOUND:
        # search engines verify before returning; re-check so nothing unverified is emitted
        if not verify(outcome.design).valid:  # pragma: no cover
            print("internal error: search returned an invalid design", file=sys.stderr)
            return EXIT_ERROR
        text = EMITTERS[args.format](outcome.design)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if outcome.status is Status.EXHAUSTED:
        print("nonexistent (exhaustive)")
        return EXIT_NEGATIVE
    print(f"timed out: best_cost={outcome.best_cost}")
    return EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbtd", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log search progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a design and print a report")
    p.add_argument("path", nargs="?", default="-", help="input file, '-' for stdin")
    p.add_argument("--format", choices=PARSERS, default="text")
    p.add_argument("--report", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="construct a design or prove none exists")
    p.add_argument("n", type=int)
    p.add_argument("--engine", choices=("backtrack", "anneal"), default="backtrack")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout", type=float, default=None, help=f"seconds (default ${TIMEOUT_ENV} or {DEFAULT_TIMEOUT:g})")
    p.add_argument("--no-timeout", action="store_true", help="run without a time budget")
    p.add_argument("--symmetry-break", action="store_true")
    p.add_argument("--count", action="store_true", help="count solutions instead of stopping at the first")
    p.add_argument("--limit", type=int, default=None, help="stop counting at this many solutions")
    p.add_argument("--portfolio", type=int, default=0, metavar="K", help="run K seeded annealers in parallel")
    p.add_argument("--format", choices=EMITTERS, default="text")
    p.add_argument("--out", default=None, help="write the design here instead of stdout")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table1", help="print the embedded side-nine design")
    p.add_argument("--format", choices=EMITTERS, default="text")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("convert", help="translate between the text and structured formats")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--from", dest="source_format", choices=PARSERS, default="text")
    p.add_argument("--to", choices=EMITTERS, default="structured")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run():
    sys.exit(main())
