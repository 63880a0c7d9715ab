# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Reports which normalization variants match the calibration oracles.
"""
from typing import List

from siegel_traces.checks.registry import BaseCheckProvider, Check
from siegel_traces.models.report_models import CheckResult


class CalibrationChecks(BaseCheckProvider):
    group = "calibration"

    def get_checks(self) -> List[Check]:
        return [Check("calibration", self._run, tags=(self.group,))]

    def _run(self) -> List[CheckResult]:
        selection = self.services.selection
        flags = selection.flags()
        results = [CheckResult(name=f"variant {name}", passed=ok, gated=False)
                   for name, ok in selection.outcomes.items()]
        results.append(CheckResult(name="selected variant", passed=True,
                                   details=f"kappa={flags.kappa}, characters={flags.normalization}, "
                                           f"exponent={flags.exponent}"))
        return results
