from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from gaussian_ideals import __version__
from gaussian_ideals.config import load_config
from gaussian_ideals.errors import GaussianIdealsError
from gaussian_ideals.io.results_writer import write_report
from gaussian_ideals.utils.logging import configure_logging
from gaussian_ideals.verify.report import Report, report_schema
from gaussian_ideals.verify.scenarios import (
    SCENARIO_NAMES,
    RunSettings,
    ScenarioRequest,
    default_suite,
    load_suite_file,
    run_scenario,
    run_suite,
)

logger = logging.getLogger(__name__)

USAGE_ERROR = 2

# verify flags that become scenario parameters
_SCENARIO_FLAGS = ("m", "n", "p", "up_to", "ideal", "graph", "left", "right", "kind", "rank")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", help="Coefficient field: q or gf:<prime> (default from GAUSS_FIELD)")
    parser.add_argument("--budget", type=int, help="Reduction-step budget per scenario")
    parser.add_argument("--timeout", type=float, help="Wall-clock seconds per scenario (0 disables)")
    parser.add_argument("--out", type=Path, help="Write the JSON report here instead of stdout")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--log-file", help="Also write log records to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussian-ideals",
        description="Verify identities of Gaussian ideals of generic polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="action", required=True)

    verify = sub.add_parser("verify", help="Run one scenario")
    verify.add_argument("scenario", choices=SCENARIO_NAMES)
    verify.add_argument("--m", type=int, help="Degree of f")
    verify.add_argument("--n", type=int, help="Degree of g")
    verify.add_argument("--p", type=int, help="Degree of h (three-polynomial scenarios)")
    verify.add_argument("--up-to", type=int, help="Largest power checked for normality")
    verify.add_argument("--ideal", choices=["product", "graph", "example"], help="Ideal for normality")
    verify.add_argument("--graph", help="Graph file or shape such as cycle:4")
    verify.add_argument("--left", help="Left graph of a join")
    verify.add_argument("--right", help="Right graph of a join")
    verify.add_argument("--kind", choices=["truncated", "capped", "cyclic"], help="Structure algebra")
    verify.add_argument("--rank", type=int, help="Rank of the structure algebra")
    verify.add_argument(
        "--no-cross-check",
        action="store_true",
        help="fiber-reduction: skip the comparison with powers of ideals",
    )
    _common(verify)

    suite = sub.add_parser("suite", help="Run the acceptance battery")
    suite.add_argument("--config", type=Path, help="JSON sweep file with a 'scenarios' list")
    suite.add_argument("--workers", type=int, help="Worker processes (default from GAUSS_WORKERS)")
    suite.add_argument("--quick", action="store_true", help="Smallest size of every check")
    _common(suite)

    schema = sub.add_parser("schema", help="Print the JSON schema of reports")
    schema.add_argument("--out", type=Path, help="Write the schema here instead of stdout")
    return parser


def _settings(args: argparse.Namespace, base: RunSettings, field: str | None = None) -> RunSettings:
    settings = base
    if field:
        settings = replace(settings, field=field)
    if args.field:
        settings = replace(settings, field=args.field)
    if args.budget is not None:
        settings = replace(settings, max_reductions=args.budget)
    if args.timeout is not None:
        settings = replace(settings, timeout_seconds=args.timeout)
    return settings


def _verify(args: argparse.Namespace, base: RunSettings) -> Report:
    params = {flag: getattr(args, flag) for flag in _SCENARIO_FLAGS}
    if args.scenario == "fiber-reduction":
        params["cross_check"] = not args.no_cross_check
    params = {k: v for k, v in params.items() if v is not None}
    scenario = run_scenario(ScenarioRequest(args.scenario, params), _settings(args, base))
    return Report([scenario])


def _suite(args: argparse.Namespace, base: RunSettings, workers: int) -> Report:
    file_field = None
    if args.config:
        file_field, requests = load_suite_file(args.config)
    else:
        requests = default_suite(quick=args.quick)
    settings = _settings(args, base, file_field)
    return run_suite(requests, settings, args.workers or workers)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.action == "schema":
        text = json.dumps(report_schema(), ensure_ascii=False, indent=2)
        if args.out:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
        return 0

    configure_logging(level=logging.DEBUG if args.debug else logging.INFO, log_file=args.log_file)

    try:
        config = load_config()
    except ValueError as e:
        sys.exit(f"Configuration Error: {e}")
    base = RunSettings.from_config(config)

    try:
        if args.action == "verify":
            report = _verify(args, base)
        else:
            report = _suite(args, base, config.workers)
    except (GaussianIdealsError, ValueError, FileNotFoundError) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR

    write_report(report, args.out)
    logger.info("Overall verdict: %s", report.verdict.value)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
