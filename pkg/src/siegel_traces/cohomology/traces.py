# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Equivariant Frobenius traces of V_{l,m} on A_2[2] from stack counts, and the
residual left after subtracting the Eisenstein, endoscopic and lift predictions.

    t_mu = sum_{n1,n2} beta[n1,n2] * sum_nu chi^mu(nu) * a(nu,n1,n2) * q^((l+m-n1-2*n2)/2)

where a = a(M2) + a(A11). The residual is minus the trace of Frobenius on the
genuine Siegel part, i.e. -lambda(q) when that part is one eigenform.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional

from siegel_traces.characters.symfunc import (
    PARTITIONS_6, Partition, contraction_for, s6_character, sp4_power_sum_coeffs, z_order,
)
from siegel_traces.cohomology.formulas import eisenstein_equivariant, endoscopy, lift_leading
from siegel_traces.cohomology.motive import MotiveTracer
from siegel_traces.counting.masses import KAPPA_LITERAL, StackCounts
from siegel_traces.errors import MissingTally, NonIntegralTrace, OddWeight
from siegel_traces.models.report_models import TraceReport, TraceRow, VariantFlags

logger = logging.getLogger(__name__)

NORMALIZATION_PLAIN = "plain"
NORMALIZATION_ALPHA = "alpha"
EXPONENT_CORRECTED = "corrected"
EXPONENT_PRINTED = "printed"


@dataclass(frozen=True)
class Normalization:
    """How census data turn into traces: character weights and the power of q."""
    characters: str = NORMALIZATION_PLAIN
    exponent: str = EXPONENT_CORRECTED

    def flags(self, kappa: str = KAPPA_LITERAL) -> VariantFlags:
        return VariantFlags(kappa=kappa, normalization=self.characters, exponent=self.exponent)


DEFAULT_NORMALIZATION = Normalization()


def target_label(target) -> str:
    if target == "full":
        return "full"
    if isinstance(target, tuple) and len(target) == 2 and target[0] == "w":
        return f"w{target[1]}"
    return "[" + ",".join(str(p) for p in target) + "]"


def character_weights(target, characters: str = NORMALIZATION_PLAIN) -> Dict[Partition, Fraction]:
    """sum_mu w(mu) chi^mu(nu) per cycle type nu, divided by z_nu for the alpha variant."""
    weights = contraction_for(target)
    out: Dict[Partition, Fraction] = {}
    for nu in PARTITIONS_6:
        c = Fraction(sum(weights(mu) * s6_character(mu, nu) for mu in PARTITIONS_6))
        if characters == NORMALIZATION_ALPHA:
            c /= z_order(nu)
        if c:
            out[nu] = c
    return out


def tate_exponent(l: int, m: int, n1: int, n2: int, exponent: str = EXPONENT_CORRECTED) -> int:
    twice = l + m - n1 - (2 * n2 if exponent == EXPONENT_CORRECTED else n2)
    if twice % 2:
        raise NonIntegralTrace(f"q-exponent ({twice})/2 at (n1, n2) = ({n1}, {n2}) is not an integer.")
    return twice // 2


def assemble_trace(counts: StackCounts, l: int, m: int, target="full",
                   normalization: Normalization = DEFAULT_NORMALIZATION) -> int:
    """t_mu for a partition mu, the full trace for "full", the S_{6-n}-invariant trace for ("w", n)."""
    if (l + m) % 2:
        raise OddWeight(l, m)
    if counts.weight_cap < l + m:
        raise MissingTally(f"Tallies over F_{counts.q} reach weight {counts.weight_cap}; (l, m) = ({l}, {m}) needs {l + m}.")

    q = counts.q
    chars = character_weights(target, normalization.characters)
    total = Fraction(0)
    for (n1, n2), b in sp4_power_sum_coeffs(l, m).items():
        inner = sum((c * counts.total(nu, n1, n2) for nu, c in chars.items()), Fraction(0))
        if inner:
            total += b * inner * q ** tate_exponent(l, m, n1, n2, normalization.exponent)
    if total.denominator != 1:
        raise NonIntegralTrace(
            f"Trace of V_({l},{m}) at q = {q}, target {target_label(target)} is {total}, not an integer."
        )
    return int(total)


@dataclass(frozen=True)
class ResidualParts:
    assembled: int
    eisenstein: int
    endoscopy: int
    lift_leading: int

    @property
    def residual(self) -> int:
        return self.assembled - self.eisenstein - self.endoscopy + self.lift_leading


def residual_parts(counts: StackCounts, l: int, m: int, tracer: MotiveTracer, target="full",
                   normalization: Normalization = DEFAULT_NORMALIZATION) -> ResidualParts:
    q = counts.q
    return ResidualParts(
        assembled=assemble_trace(counts, l, m, target, normalization),
        eisenstein=eisenstein_equivariant(l, m).evaluate(q, tracer, target),
        endoscopy=endoscopy(l, m, tracer.store).evaluate(q, tracer, target),
        lift_leading=lift_leading(l, m, tracer.store).evaluate(q, tracer, target),
    )


def residual_trace(counts: StackCounts, l: int, m: int, tracer: MotiveTracer, target="full",
                   normalization: Normalization = DEFAULT_NORMALIZATION) -> int:
    """t - Eis - expanded endoscopy + lift leading terms; -lambda(q) for a single genuine eigenform."""
    return residual_parts(counts, l, m, tracer, target, normalization).residual


def trace_report(counts: StackCounts, l: int, m: int, tracer: MotiveTracer,
                 targets: Optional[Iterable] = None,
                 normalization: Normalization = DEFAULT_NORMALIZATION) -> TraceReport:
    """Per-isotype rows plus the full trace."""
    targets = list(targets) if targets is not None else list(PARTITIONS_6) + ["full"]
    rows = []
    for target in targets:
        parts = residual_parts(counts, l, m, tracer, target, normalization)
        rows.append(TraceRow(target=target_label(target), assembled=parts.assembled,
                             eisenstein=parts.eisenstein, endoscopy=parts.endoscopy,
                             lift_leading=parts.lift_leading, residual=parts.residual))
    logger.info(f"Trace report for V_({l},{m}) at q = {counts.q}: {len(rows)} rows.")
    return TraceReport(q=counts.q, l=l, m=m, rows=rows, variant_flags=normalization.flags(counts.kappa))


def square_eigenvalue(counts: StackCounts, l: int, m: int, tracer: MotiveTracer, target="full",
                      normalization: Normalization = DEFAULT_NORMALIZATION) -> int:
    """
    Tabulated lambda(p^2) from the counts over F_{p^2}: minus the residual with
    every elliptic space traced by its Hecke coefficients a(p^2) instead of the
    Frobenius power sums. At q = p both conventions agree.
    """
    return -residual_trace(counts, l, m, tracer.with_hecke_coefficients(), target, normalization)
