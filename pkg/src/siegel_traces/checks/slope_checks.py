# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Checks of lambda(p), lambda(p^2) and the Newton slopes on S_{2,6}(Gamma_2[2]),
rebuilt from the counts over F_p and F_{p^2}.
"""
from functools import partial
from typing import List

from siegel_traces.checks.registry import BaseCheckProvider, Check
from siegel_traces.cohomology.reference import SLOPE_ROWS, SlopeRow, expand
from siegel_traces.cohomology.slopes import newton_slopes
from siegel_traces.cohomology.traces import residual_trace, square_eigenvalue
from siegel_traces.models.report_models import CheckResult


class SlopeChecks(BaseCheckProvider):
    group = "slopes"

    def get_checks(self) -> List[Check]:
        fields = set(self.services.cached_fields())
        return [Check(f"slopes {list(row.mu)} at p={row.p}", partial(self._run_row, row),
                      tags=(self.group, str(row.p)))
                for row in SLOPE_ROWS if row.p in fields and row.p ** 2 in fields]

    def _run_row(self, row: SlopeRow) -> List[CheckResult]:
        l, m = row.lm
        p = row.p
        tracer, normalization = self.services.tracer, self.services.normalization
        lam_p = -residual_trace(self.services.counts(p, l + m), l, m, tracer, row.mu, normalization)
        lam_p2 = square_eigenvalue(self.services.counts(p * p, l + m), l, m, tracer, row.mu, normalization)
        slopes = newton_slopes(l, m, p, lam_p, lam_p2)
        label = f"{list(row.mu)} at p={p}"
        return [
            CheckResult(name=f"lambda({p}) {label}", passed=lam_p == expand(row.lam_p),
                        expected=expand(row.lam_p), actual=lam_p),
            CheckResult(name=f"lambda({p * p}) {label}", passed=lam_p2 == expand(row.lam_p2),
                        expected=expand(row.lam_p2), actual=lam_p2),
            CheckResult(name=f"slopes {label}", passed=tuple(slopes) == row.slopes, gated=row.gated,
                        details=f"computed {[str(s) for s in slopes]}, printed {[str(s) for s in row.slopes]}"
                                + (f"; {row.note}" if row.note else "")),
        ]
