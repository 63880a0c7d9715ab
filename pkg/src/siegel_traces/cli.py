# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Command line front end.

    census       count curves over F_q and cache the tallies
    verify       compare assembled traces with the e_c table
    eigenvalues  read Siegel Hecke eigenvalues off the residual traces
    congruence   test the congruences with elliptic newforms
    calibrate    report which normalization variants fit the oracles
    report       print the per-isotype trace decomposition

Exit codes: 0 success, 1 mathematical mismatch, 2 operational error.
"""
import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import sympy
from pydantic import ValidationError

from siegel_traces.app_services import AppServices
from siegel_traces.characters.symfunc import PARTITIONS_6, canonical
from siegel_traces.checks.registry import Check
from siegel_traces.cohomology.harder import harder_case
from siegel_traces.cohomology.reference import E_C_TABLE, eigen_column
from siegel_traces.cohomology.traces import residual_trace, square_eigenvalue, trace_report
from siegel_traces.config import TOOL_VERSION
from siegel_traces.errors import MissingCache, SiegelTracesError, UsageError
from siegel_traces.models.report_models import CheckResult, RunConfig, RunReport
from siegel_traces.utils.formatting import factored, render_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2


def _pair(text: str) -> Tuple[int, int]:
    try:
        a, b = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got '{text}'") from None
    return a, b


def _partition(text: str) -> Tuple[int, ...]:
    try:
        mu = canonical(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a partition like '2,2,1,1', got '{text}'") from None
    if mu not in PARTITIONS_6:
        raise argparse.ArgumentTypeError(f"{text} is not a partition of 6")
    return mu


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON run configuration; flags override it.")
    common.add_argument("--q", type=int, action="append", help="Field size (repeatable).")
    common.add_argument("--weight", type=int, dest="weight_cap", help="Largest l+m the tallies support.")
    common.add_argument("--shards", type=int)
    common.add_argument("--cache-dir", dest="cache_dir")
    common.add_argument("--format", dest="output_format", choices=("json", "csv"))
    common.add_argument("--kappa", choices=("calibrated", "literal", "double"))
    common.add_argument("--normalization", choices=("calibrated", "plain", "alpha"))
    common.add_argument("--long-run", dest="long_run", action="store_true", default=None,
                        help="Allow censuses beyond the default field cap.")

    parser = argparse.ArgumentParser(prog="siegel-traces",
                                     description="Frobenius traces of local systems on A_2[2] by curve counting.")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("census", parents=[common], help="Count curves and cache the tallies.")

    verify = commands.add_parser("verify", parents=[common], help="Check traces against the e_c table.")
    verify.add_argument("--rows", type=_pair, nargs="*", metavar="L,M", help="Table rows; all by default.")
    verify.add_argument("--all-checks", action="store_true",
                        help="Also run the eigenvalue, slope and congruence checks.")

    eigen = commands.add_parser("eigenvalues", parents=[common], help="Siegel eigenvalues from the counts.")
    eigen.add_argument("--space", type=_pair, required=True, metavar="J,K")
    eigen.add_argument("--mu", type=_partition, required=True, metavar="PARTITION")

    congruence = commands.add_parser("congruence", parents=[common], help="Congruences with elliptic newforms.")
    congruence.add_argument("--case", required=True)

    commands.add_parser("calibrate", parents=[common], help="Select the normalization variants.")

    report = commands.add_parser("report", parents=[common], help="Per-isotype trace decomposition.")
    report.add_argument("--rows", type=_pair, nargs="+", required=True, metavar="L,M")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Environment defaults, then the JSON file, then explicit flags."""
    values = {}
    if args.config is not None:
        try:
            values = json.loads(args.config.read_text())
        except json.JSONDecodeError as e:
            raise UsageError(f"Could not parse run configuration {args.config}: {e}") from e
    for key in ("q", "weight_cap", "shards", "cache_dir", "output_format", "kappa", "normalization", "long_run"):
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise UsageError(f"Invalid run configuration: {e}") from e


# --- Commands ---

def cmd_census(services: AppServices, args: argparse.Namespace) -> Optional[RunReport]:
    if not services.config.q:
        raise UsageError("census needs at least one --q.")
    for q in services.config.q:
        paths = asyncio.run(services.run_census(q))
        for path in paths:
            print(path)
    return None


def _report(services: AppServices, command: str, results: List[CheckResult] = (), traces=()) -> RunReport:
    return RunReport(command=command, tool_version=TOOL_VERSION, variant_flags=services.flags(),
                     cache_hashes=services.tally_store.hashes(), results=list(results), traces=list(traces))


def _run_checks(services: AppServices, select: Callable[[Check], bool]) -> List[CheckResult]:
    registry = services.initialize_check_registry()
    return registry.run(select)


def cmd_verify(services: AppServices, args: argparse.Namespace) -> RunReport:
    if not services.cached_fields():
        raise MissingCache(f"No census in {services.tally_store.cache_dir}; run `census` first.")
    rows = set(args.rows) if args.rows else None
    if rows:
        unknown = [lm for lm in rows if lm not in E_C_TABLE]
        if unknown:
            raise UsageError(f"No e_c table row for {unknown}.")

    def select(check: Check) -> bool:
        if "table" in check.tags or "residual" in check.tags:
            return rows is None or any(f"{l},{m}" in check.tags for l, m in rows)
        return args.all_checks

    return _report(services, "verify", _run_checks(services, select))


def cmd_eigenvalues(services: AppServices, args: argparse.Namespace) -> RunReport:
    j, k = args.space
    l, m = j + k - 3, k - 3
    mu = args.mu
    column = eigen_column(j, k, mu)
    fields = services.cached_fields()
    primes = [q for q in fields if sympy.isprime(q)]
    if not primes:
        raise MissingCache(f"No census over a prime field in {services.tally_store.cache_dir}.")

    tracer, normalization = services.tracer, services.normalization
    label = f"S_{j},{k}^[{','.join(map(str, mu))}]"
    results = []
    for p in primes:
        lam = -residual_trace(services.counts(p, l + m), l, m, tracer, mu, normalization)
        expected = column.eigenvalue(p) if column is not None and p in column.values else None
        results.append(CheckResult(name=f"lambda({p}) on {label}", passed=expected is None or lam == expected,
                                   gated=expected is not None, expected=expected, actual=lam,
                                   details=factored(lam)))
        if p * p in fields:
            lam_p2 = square_eigenvalue(services.counts(p * p, l + m), l, m, tracer, mu, normalization)
            results.append(CheckResult(name=f"lambda({p * p}) on {label}", passed=True, gated=False,
                                       actual=lam_p2, details=factored(lam_p2)))
    return _report(services, "eigenvalues", results)


def cmd_congruence(services: AppServices, args: argparse.Namespace) -> RunReport:
    case = harder_case(args.case)
    return _report(services, "congruence",
                   _run_checks(services, lambda check: check.tags[:2] == ("congruence", case.case_id)))


def cmd_calibrate(services: AppServices, args: argparse.Namespace) -> RunReport:
    return _report(services, "calibrate", _run_checks(services, lambda check: "calibration" in check.tags))


def cmd_report(services: AppServices, args: argparse.Namespace) -> RunReport:
    fields = services.cached_fields()
    if not fields:
        raise MissingCache(f"No census in {services.tally_store.cache_dir}; run `census` first.")
    traces = []
    for l, m in args.rows:
        for q in fields:
            counts = services.counts(q, l + m)
            traces.append(trace_report(counts, l, m, services.tracer, normalization=services.normalization))
    return _report(services, "report", traces=traces)


COMMANDS = {
    "census": cmd_census,
    "verify": cmd_verify,
    "eigenvalues": cmd_eigenvalues,
    "congruence": cmd_congruence,
    "calibrate": cmd_calibrate,
    "report": cmd_report,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
        services = asyncio.run(AppServices.create(config))
        report = COMMANDS[args.command](services, args)
    except (SiegelTracesError, OSError) as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if report is None:
        return EXIT_OK
    sys.stdout.write(render_report(report, config.output_format))
    return EXIT_OK if report.passed else EXIT_MISMATCH
