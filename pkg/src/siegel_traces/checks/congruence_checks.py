# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Checks of the congruences between counted Siegel eigenvalues and elliptic newforms.
"""
from functools import partial
from typing import List, Sequence

import sympy

from siegel_traces.checks.registry import BaseCheckProvider, Check
from siegel_traces.cohomology.harder import HARDER_CASES, HarderCase, harder_check
from siegel_traces.models.report_models import CheckResult

# Largest prime at which each case is gated; beyond it results are reported only.
GATED_PRIME = {"61": 13}
DEFAULT_GATED_PRIME = 7


class CongruenceChecks(BaseCheckProvider):
    group = "congruence"

    def get_checks(self) -> List[Check]:
        primes = [q for q in self.services.cached_fields() if sympy.isprime(q)]
        if not primes:
            return []
        return [Check(f"congruence {case.case_id}", partial(self.run_case, case, primes),
                      tags=(self.group, case.case_id))
                for case in HARDER_CASES.values()]

    def run_case(self, case: HarderCase, primes: Sequence[int]) -> List[CheckResult]:
        gate = GATED_PRIME.get(case.case_id, DEFAULT_GATED_PRIME)
        rows = harder_check(case, primes, lambda p: self.services.counts(p, sum(case.lm)), self.services.tracer,
                            self.services.normalization)
        return [CheckResult(name=f"congruence {case.case_id} {row.target} at p={row.p}", passed=row.passed,
                            gated=row.p <= gate, expected=row.predicted % case.ell, actual=row.lam % case.ell,
                            details=f"lambda = {row.lam}, a(p) = {row.a_p}, mod {case.ell}")
                for row in rows]
