# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Checks of Siegel Hecke eigenvalues, read off as minus the residual trace,
against the published eigenvalue columns.
"""
from functools import partial
from typing import List, Sequence

from siegel_traces.checks.registry import BaseCheckProvider, Check
from siegel_traces.cohomology.reference import EIGEN_COLUMNS, EigenColumn
from siegel_traces.cohomology.traces import residual_trace
from siegel_traces.models.report_models import CheckResult


class EigenvalueChecks(BaseCheckProvider):
    group = "eigenvalues"

    def get_checks(self) -> List[Check]:
        fields = self.services.cached_fields()
        checks = []
        for column in EIGEN_COLUMNS:
            primes = [q for q in fields if q in column.values]
            if primes:
                checks.append(Check(f"lambda {column.label}", partial(self._run_column, column, primes),
                                    tags=(self.group, column.label)))
        return checks

    def _run_column(self, column: EigenColumn, primes: Sequence[int]) -> List[CheckResult]:
        l, m = column.lm
        results = []
        for p in primes:
            counts = self.services.counts(p, l + m)
            lam = -residual_trace(counts, l, m, self.services.tracer, column.mu, self.services.normalization)
            expected = column.eigenvalue(p)
            results.append(CheckResult(name=f"lambda({p}) on {column.label}", passed=lam == expected,
                                       expected=expected, actual=lam))
        return results
