# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
    Collection of utility functions for rendering numbers and reports consistently.

"""
import csv
import io
import json
from typing import Iterable, List, Sequence

import sympy

from siegel_traces.models.report_models import RunReport


def factored(n: int) -> str:
    """-2^3*5 style factorization, the way the eigenvalue tables print it."""
    if n in (-1, 0, 1):
        return str(n)
    sign = "-" if n < 0 else ""
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(sympy.factorint(abs(n)).items())]
    return sign + "*".join(parts)


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(v) for v in row])
    return buffer.getvalue()


def render_report(report: RunReport, output_format: str = "json") -> str:
    """JSON dump of the whole report, or one CSV table of checks and trace rows."""
    if output_format == "json":
        return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"

    lines: List[str] = [f"# {report.command} {report.tool_version} "
                        f"kappa={report.variant_flags.kappa} characters={report.variant_flags.normalization} "
                        f"exponent={report.variant_flags.exponent}"]
    for name, digest in sorted(report.cache_hashes.items()):
        lines.append(f"# {name} sha256={digest}")
    text = "\n".join(lines) + "\n"
    if report.results:
        text += to_csv(("name", "passed", "gated", "expected", "actual", "details"),
                       ((r.name, r.passed, r.gated, "" if r.expected is None else r.expected,
                         "" if r.actual is None else r.actual, r.details) for r in report.results))
    if report.traces:
        text += to_csv(("q", "l", "m", "target", "assembled", "eisenstein", "endoscopy", "lift_leading",
                        "residual", "lambda"),
                       ((t.q, t.l, t.m, row.target, row.assembled, row.eisenstein, row.endoscopy,
                         row.lift_leading, row.residual, factored(-row.residual))
                        for t in report.traces for row in t.rows))
    return text
