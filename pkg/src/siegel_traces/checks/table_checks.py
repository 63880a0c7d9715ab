# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Checks of the assembled full traces against the e_c table, and of the residual
in weights without Siegel cusp forms.
"""
import logging
from functools import partial
from typing import List, Sequence, Tuple

from siegel_traces.characters.symfunc import PARTITIONS_6
from siegel_traces.checks.registry import BaseCheckProvider, Check
from siegel_traces.cohomology.formulas import predicted_non_siegel
from siegel_traces.cohomology.reference import E_C_ROWS, TableRow
from siegel_traces.cohomology.traces import assemble_trace, residual_trace, target_label
from siegel_traces.models.report_models import CheckResult

logger = logging.getLogger(__name__)

# (l, m) with no Siegel cusp forms on Gamma_2[2].
RESIDUAL_FREE = ((2, 0), (3, 1))


class TableChecks(BaseCheckProvider):
    """
    One check per e_c row. Rows without a Siegel symbol must match the count
    exactly; rows with one report the trace left for the Siegel forms. Rows
    with l = m are informational.
    """
    group = "table"

    def get_checks(self) -> List[Check]:
        fields = self.services.cached_fields()
        checks = [Check(f"e_c({row.l},{row.m})", partial(self._run_row, row, fields),
                        tags=(self.group, f"{row.l},{row.m}"))
                  for row in E_C_ROWS]
        checks += [Check(f"residual{lm}", partial(self._run_residual_free, lm, fields),
                         tags=("residual", f"{lm[0]},{lm[1]}"))
                   for lm in RESIDUAL_FREE]
        return checks

    def _run_row(self, row: TableRow, fields: Sequence[int]) -> List[CheckResult]:
        tracer = self.services.tracer
        results = []
        for q in fields:
            counts = self.services.counts(q, row.l + row.m)
            actual = assemble_trace(counts, row.l, row.m, "full", self.services.normalization)
            table = row.expr.without_siegel().evaluate(q, tracer)
            predicted = predicted_non_siegel(row.l, row.m, self.services.eigen_store).dim().evaluate(q, tracer)
            name = f"e_c({row.l},{row.m}) at q={q}"
            if row.has_siegel_part:
                siegel = row.expr.siegel_part()
                details = f"trace on {next(siegel.items())[1]}: {table - actual}"
                results.append(CheckResult(name=name, passed=True, gated=False, expected=table, actual=actual,
                                           details=details))
                continue
            details = f"formulas predict {predicted}"
            if row.note:
                details += f"; {row.note}"
            results.append(CheckResult(name=name, passed=actual == table, gated=row.gated,
                                       expected=table, actual=actual, details=details))
        return results

    def _run_residual_free(self, lm: Tuple[int, int], fields: Sequence[int]) -> List[CheckResult]:
        l, m = lm
        results = []
        for q in fields:
            counts = self.services.counts(q, l + m)
            for mu in list(PARTITIONS_6) + ["full"]:
                residual = residual_trace(counts, l, m, self.services.tracer, mu, self.services.normalization)
                results.append(CheckResult(name=f"residual({l},{m}) {target_label(mu)} at q={q}",
                                           passed=residual == 0, expected=0, actual=residual))
        return results
