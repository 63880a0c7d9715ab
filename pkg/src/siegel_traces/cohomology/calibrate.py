# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Chooses the normalization variants by the oracle rows that do not involve any
unknown Siegel eigenvalue, plus the first eigenvalue column at small primes.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

from siegel_traces.cohomology.motive import MotiveTracer
from siegel_traces.cohomology.reference import E_C_TABLE, EIGEN_COLUMNS
from siegel_traces.cohomology.traces import (
    EXPONENT_CORRECTED, EXPONENT_PRINTED, NORMALIZATION_ALPHA, NORMALIZATION_PLAIN, Normalization,
    assemble_trace, residual_trace,
)
from siegel_traces.counting.masses import KAPPA_DOUBLE, KAPPA_LITERAL, StackCounts
from siegel_traces.errors import NoVariantFits, NonIntegralTrace
from siegel_traces.models.report_models import VariantFlags

logger = logging.getLogger(__name__)

CALIBRATION_FIELDS = (3, 5, 7)
FULL_TRACE_ORACLES = ((0, 0), (2, 0), (3, 1))


@dataclass
class VariantSelection:
    kappa: str
    normalization: Normalization
    outcomes: Dict[str, bool] = field(default_factory=dict)

    def flags(self) -> VariantFlags:
        return self.normalization.flags(self.kappa)


def _oracle_failures(counts_for: Callable[[int], StackCounts], normalization: Normalization,
                     tracer: MotiveTracer, fields: Sequence[int]) -> List[str]:
    failures = []
    column = EIGEN_COLUMNS[0]
    l, m = column.lm
    for q in fields:
        counts = counts_for(q)
        for lm in FULL_TRACE_ORACLES:
            expected = E_C_TABLE[lm].expr.evaluate(q, tracer)
            if assemble_trace(counts, *lm, "full", normalization) != expected:
                failures.append(f"{lm} at q = {q}")
        if q in column.values:
            if residual_trace(counts, l, m, tracer, column.mu, normalization) != -column.eigenvalue(q):
                failures.append(f"{column.label} at p = {q}")
    return failures


def candidates(kappas: Sequence[str] = (KAPPA_LITERAL, KAPPA_DOUBLE),
               characters: Sequence[str] = (NORMALIZATION_PLAIN, NORMALIZATION_ALPHA),
               exponents: Sequence[str] = (EXPONENT_CORRECTED, EXPONENT_PRINTED)) -> List[Tuple[str, Normalization]]:
    """Variants in order of preference; the literal conjugate-pair term comes first."""
    return [(kappa, Normalization(chars, exponent))
            for chars, exponent, kappa in itertools.product(characters, exponents, kappas)]


def calibrate(counts_for: Callable[[int, str], StackCounts], tracer: MotiveTracer,
              fields: Sequence[int] = CALIBRATION_FIELDS,
              variants: Sequence[Tuple[str, Normalization]] = None) -> VariantSelection:
    """
    First variant (in preference order) that matches every oracle.
    counts_for(q, kappa) builds the stack counts of F_q under a kappa variant.
    """
    variants = list(variants) if variants is not None else candidates()
    outcomes: Dict[str, bool] = {}
    chosen = None
    for kappa, normalization in variants:
        name = f"kappa={kappa}, characters={normalization.characters}, exponent={normalization.exponent}"
        try:
            failures = _oracle_failures(lambda q: counts_for(q, kappa), normalization, tracer, fields)
        except NonIntegralTrace as e:
            failures = [str(e)]
        outcomes[name] = not failures
        if failures:
            logger.info(f"Variant {name} fails: {'; '.join(failures[:3])}")
        else:
            logger.info(f"Variant {name} matches every oracle.")
            if chosen is None:
                chosen = (kappa, normalization)

    if chosen is None:
        logger.error("No normalization variant matches the oracle rows.")
        raise NoVariantFits(f"None of {len(variants)} variants matches the oracles at q in {list(fields)}.")
    kappa, normalization = chosen
    return VariantSelection(kappa, normalization, outcomes)
