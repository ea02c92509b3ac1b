"""CLI entry point for qorth.

Dispatches to suite verification, the R-matrix report and expression
reduction. Exit codes: 0 all checks pass, 1 a check failed or was
inconclusive, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from qorth.errors import ConfigError, ParseError, QorthError, SuiteError

logger = logging.getLogger(__name__)

_USAGE_ERRORS = (SuiteError, ParseError, ConfigError)


def _build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = argparse.ArgumentParser(
        prog="qorth",
        description="Exact symbolic verification for the quantum group SO_q(3).",
    )
    parser.add_argument("--version", action="store_true", help="Show version and exit")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--no-color", action="store_true", help="Plain text output")

    subparsers = parser.add_subparsers(dest="subcommand")

    verify = subparsers.add_parser("verify", help="Run verification suites")
    target = verify.add_mutually_exclusive_group()
    target.add_argument(
        "--suite", action="append", metavar="NAME", help="Suite to run (repeatable)"
    )
    target.add_argument("--all", action="store_true", help="Run every suite")
    target.add_argument("--list", action="store_true", help="List registered suites")
    verify.add_argument(
        "--max-n", type=int, default=None, help="Largest |n| for bundles"
    )
    verify.add_argument(
        "--max-j", type=int, default=None, help="Largest J for the Casimir"
    )
    verify.add_argument(
        "--degree-bound",
        type=int,
        default=None,
        help="Degree bound for ideal membership",
    )
    verify.add_argument(
        "--jobs", type=int, default=None, help="Suites run concurrently"
    )
    verify.add_argument(
        "--seed", type=int, default=None, help="Seed for sampled properties"
    )
    verify.add_argument(
        "--samples", type=int, default=None, help="Sampled cases per property"
    )
    verify.add_argument(
        "--json", type=str, default=None, metavar="PATH", help="Write JSON report"
    )
    verify.add_argument(
        "--timings", action="store_true", help="Show and record elapsed ms per check"
    )

    rmatrix = subparsers.add_parser(
        "rmatrix", help="Print the R-matrix and its projectors"
    )
    rmatrix.add_argument(
        "--n", type=int, default=3, help="Size N of the defining matrix"
    )
    rmatrix.add_argument("--emit", choices=("json", "text"), default="text")

    reduce = subparsers.add_parser("reduce", help="Normal form of an expression")
    reduce.add_argument(
        "--algebra", choices=("sl2", "c3", "ext", "uq", "so2"), default="sl2"
    )
    reduce.add_argument("expr", type=str, help="Expression, e.g. 'a*d'")

    return parser


def _setup_logging(debug: bool = False, *, config_level: str | None = None) -> None:
    """Configure logging level.

    Args:
        debug: If True, force DEBUG level (overrides config_level).
        config_level: Log level from config (e.g. "INFO", "WARNING").
    """
    if debug:
        level = logging.DEBUG
    elif config_level:
        level = getattr(logging, config_level.upper(), logging.WARNING)
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        force=True,
    )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _algebra(name: str) -> tuple[Any, Callable[[Any], Any]]:
    if name == "sl2":
        from qorth.slq2 import SL_ALPHABET, sl_reduce

        return SL_ALPHABET, sl_reduce
    if name == "c3":
        from qorth.rmatrix import X_ALPHABET, c3_system

        return X_ALPHABET, c3_system().normal_form
    if name == "ext":
        from qorth.rmatrix import E_ALPHABET, exterior_system

        return E_ALPHABET, exterior_system().normal_form
    if name == "uq":
        from qorth.uqdual import UQ_ALPHABET, uq_reduce

        return UQ_ALPHABET, uq_reduce
    from qorth.soq3 import Z_ALPHABET, z_reduce

    return Z_ALPHABET, z_reduce


def _run_reduce(ui: Any, algebra: str, text: str) -> int:
    from qorth.expr import parse_poly

    alphabet, reducer = _algebra(algebra)
    ui.print(str(reducer(parse_poly(text, alphabet))))
    return 0


def _run_rmatrix(ui: Any, n: int, emit: str) -> int:
    from qorth.rmatrix import rmatrix_payload

    payload = rmatrix_payload(n)
    if emit == "json":
        ui.print(json.dumps(payload, indent=2, ensure_ascii=False))
        return 0
    ui.print(f"R-matrix N={n}: {len(payload['R'])} nonzero entries")
    for e in payload["R"]:
        ui.print(f"  R[{e['row']},{e['col']}] = {e['value']}")
    for name, proj in payload["projectors"].items():
        ui.print(f"P_{name}: rank {proj['rank']}")
    for name, rels in payload["relations"].items():
        ui.print(f"{name} relations:")
        for rel in rels:
            ui.print(f"  {rel} = 0")
    return 0


def _run_verify(ui: Any, config: Any, args: argparse.Namespace) -> int:
    from qorth.report import build_document, exit_code, write_document
    from qorth.suites import SuiteContext, create_default_registry

    registry = create_default_registry()
    if args.list:
        for suite in registry.list_suites():
            ui.print(f"{suite.name:<18} {suite.description}")
        return 0
    if args.all:
        suites = registry.list_suites()
    elif args.suite:
        suites = registry.order(args.suite)
    else:
        raise SuiteError(
            "No suite selected",
            code="SUITE_UNKNOWN",
            suggestions=["Pass --suite NAME, --all or --list"],
        )

    ctx = SuiteContext(
        max_n=config.max_n,
        max_j=config.max_j,
        degree_bound=config.degree_bound,
        seed=config.seed,
        samples=config.samples,
    )
    logger.info("running %d suites with %d jobs", len(suites), config.jobs)
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        futures = [pool.submit(s.run, ctx) for s in suites]
        reports = [f.result() for f in futures]

    for report in reports:
        ui.show_report(report)
    ui.show_summary(reports)

    json_path = args.json or config.json_path
    if json_path:
        doc = build_document(reports, timings=args.timings)
        write_document(Path(json_path), doc)
        logger.info("report written to %s", json_path)
    return exit_code(reports)


def _apply_flags(config: Any, args: argparse.Namespace) -> None:
    """CLI flags override env and config file values."""
    for flag in ("max_n", "max_j", "degree_bound", "jobs", "seed", "samples"):
        value = getattr(args, flag, None)
        if value is not None:
            setattr(config, flag, value)


def main(argv: list[str] | None = None) -> None:
    """Main entry point for the qorth CLI."""
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.version:
        from qorth import __version__

        print(f"qorth {__version__}")
        return

    if args.no_color or os.environ.get("NO_COLOR"):
        os.environ["NO_COLOR"] = "1"

    _setup_logging(debug=args.debug)

    from qorth.config import load_config
    from qorth.ui import UI

    config = load_config()
    _setup_logging(debug=args.debug, config_level=config.log_level)

    ui = UI(
        no_color=bool(os.environ.get("NO_COLOR")),
        timings=bool(getattr(args, "timings", False)),
    )

    if args.subcommand is None:
        parser.print_help()
        sys.exit(2)

    try:
        if args.subcommand == "reduce":
            code = _run_reduce(ui, args.algebra, args.expr)
        elif args.subcommand == "rmatrix":
            code = _run_rmatrix(ui, args.n, args.emit)
        else:
            _apply_flags(config, args)
            for warning in config.validate():
                ui.show_warning(warning)
            code = _run_verify(ui, config, args)
    except QorthError as exc:
        logger.debug("command failed", exc_info=True)
        ui.show_error(exc)
        code = 2 if isinstance(exc, _USAGE_ERRORS) else 1

    if code:
        sys.exit(code)
