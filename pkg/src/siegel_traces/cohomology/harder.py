# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Congruences between Siegel eigenvalues read off the counts and elliptic newforms:

    lambda(p) = p^(k-2) + a(p) + p^(s-1)  (mod ell)

for F of weight (j, k), f of weight j+2k-2 and s = j+k, whenever ell divides
the critical value L(f, s).
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from siegel_traces.cohomology.motive import MotiveTracer
from siegel_traces.cohomology.traces import DEFAULT_NORMALIZATION, Normalization, residual_trace, target_label
from siegel_traces.counting.masses import StackCounts
from siegel_traces.errors import MissingCache, MissingData, MissingTally, UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HarderCase:
    case_id: str
    ell: int
    f_level: int
    f_part: str
    j: int
    k: int
    targets: Tuple = (("w", 1),)

    @property
    def f_weight(self) -> int:
        return self.j + 2 * self.k - 2

    @property
    def s(self) -> int:
        return self.j + self.k

    @property
    def lm(self) -> Tuple[int, int]:
        return self.j + self.k - 3, self.k - 3

    def predicted(self, p: int, a_p: int) -> int:
        return p ** (self.k - 2) + a_p + p ** (self.s - 1)


HARDER_CASES: Dict[str, HarderCase] = {case.case_id: case for case in (
    HarderCase("61", 61, 2, "plus", 2, 10),
    HarderCase("109", 109, 2, "plus", 10, 6),
    HarderCase("29", 29, 2, "minus", 6, 7),
    HarderCase("79", 79, 2, "minus", 12, 5),
    HarderCase("37", 37, 2, "plus", 16, 4),
    HarderCase("37-level4", 37, 4, "new", 8, 5, targets=((4, 1, 1), (3, 3))),
)}


def harder_case(case_id: str) -> HarderCase:
    try:
        return HARDER_CASES[case_id]
    except KeyError:
        raise UsageError(f"Unknown congruence case '{case_id}'; known: {', '.join(HARDER_CASES)}.") from None


@dataclass(frozen=True)
class CongruenceRow:
    case_id: str
    p: int
    target: str
    lam: int
    a_p: int
    predicted: int
    ell: int

    @property
    def passed(self) -> bool:
        return (self.lam - self.predicted) % self.ell == 0


def harder_check(case: HarderCase, primes: Sequence[int], counts_for: Callable[[int], StackCounts],
                 tracer: MotiveTracer, normalization: Normalization = DEFAULT_NORMALIZATION) -> List[CongruenceRow]:
    """lambda(p) = -residual at each prime and target, tested against the congruence."""
    l, m = case.lm
    rows: List[CongruenceRow] = []
    for p in primes:
        try:
            counts = counts_for(p)
        except (MissingCache, MissingTally) as e:
            logger.warning(f"Case {case.case_id}: no usable census at p = {p}: {e}")
            continue
        a_p = tracer.store.eigenvalue(case.f_level, case.f_weight, p, case.f_part)
        for target in case.targets:
            lam = -residual_trace(counts, l, m, tracer, target, normalization)
            row = CongruenceRow(case.case_id, p, target_label(target), lam, a_p, case.predicted(p, a_p), case.ell)
            logger.info(f"Case {case.case_id}, p = {p}, {row.target}: lambda = {lam}, "
                        f"p^{case.k - 2} + a(p) + p^{case.s - 1} = {row.predicted}, "
                        f"{'holds' if row.passed else 'FAILS'} mod {case.ell}.")
            rows.append(row)
    if not rows:
        raise MissingData(f"No census data for case {case.case_id} at primes {list(primes)}.")
    return rows
