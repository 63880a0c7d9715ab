# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Groupoid masses of the two strata of A_2[2] from census tallies.

a_M2 divides the genus-2 power sums by |GL_2(k)|. a_A11 combines two elliptic
curves with marked 2-torsion: ordered pairs of cubic patterns over k, plus a
Galois-conjugate pair E, E^sigma defined over k2 when every part of nu is even.
"""
import logging
from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from siegel_traces.characters.symfunc import PARTITIONS_3, canonical
from siegel_traces.counting.census import GENUS1_BASE, GENUS1_EXT, GENUS2, CensusTally
from siegel_traces.counting.ffield import FieldSpec
from siegel_traces.errors import StratumMismatch, TallyError

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]

KAPPA_LITERAL = "literal"
KAPPA_DOUBLE = "double"
KAPPA_VARIANTS = (KAPPA_LITERAL, KAPPA_DOUBLE)


def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def reduced_gl2_order(q: int) -> int:
    """|GL_2(k)| / (q+1): the group acting on cubic models y^2 = c*f(x) with fixed origin."""
    return q * (q - 1) ** 2


def a_M2(T: CensusTally, F: FieldSpec, nu: Partition, n1: int, n2: int) -> Fraction:
    _require(T, GENUS2)
    return Fraction(T.entry(canonical(nu), n1, n2), gl2_order(F.q))


def b_mass(T: CensusTally, rho: Partition, m1: int, m2: int) -> Fraction:
    """Normalised elliptic power sum b(rho, m1, m2) over the field of T."""
    return Fraction(T.entry(canonical(rho), m1, m2), reduced_gl2_order(T.q))


def half_partition(nu: Partition) -> Partition:
    """[1^{nu_2} 2^{nu_4} 3^{nu_6}] for a partition with only even parts."""
    return canonical(part // 2 for part in nu)


def a_A11(Tbase: CensusTally, Text: CensusTally, F: FieldSpec, nu: Partition, n1: int, n2: int,
          kappa: str = KAPPA_LITERAL) -> Fraction:
    _require(Tbase, GENUS1_BASE)
    _require(Text, GENUS1_EXT)
    nu = canonical(nu)

    total = Fraction(0)
    for rho in PARTITIONS_3:
        for sigma in PARTITIONS_3:
            if canonical(rho + sigma) != nu:
                continue
            for m1 in range(n1 + 1):
                for m2 in range(n2 + 1):
                    total += (comb(n1, m1) * comb(n2, m2)
                              * b_mass(Tbase, rho, m1, m2) * b_mass(Tbase, sigma, n1 - m1, n2 - m2))
    total /= 2

    if n1 == 0 and all(part % 2 == 0 for part in nu):
        scale = 2 ** n2 if kappa == KAPPA_DOUBLE else 1
        total += Fraction(scale, 2) * b_mass(Text, half_partition(nu), n2, 0)
    return total


class StackCounts:
    """
    a(M2) + a(A11) for one base field, cached per (nu, n1, n2).

    Needs the genus-2 tally of the field, the genus-1 tally of the field and the
    genus-1 tally of its quadratic extension.
    """

    def __init__(self, F: FieldSpec, genus2: CensusTally, genus1_base: CensusTally,
                 genus1_ext: CensusTally, kappa: str = KAPPA_LITERAL):
        if kappa not in KAPPA_VARIANTS:
            raise ValueError(f"Unknown kappa variant '{kappa}'.")
        for tally, expected in ((genus2, F.id), (genus1_base, F.id), (genus1_ext, (F.p, 2 * F.n))):
            if tally.field_id != expected:
                raise TallyError(f"{tally.stratum} tally is over F_{tally.q}, expected p^n = {expected}.")
        self.F = F
        self.genus2 = genus2
        self.genus1_base = genus1_base
        self.genus1_ext = genus1_ext
        self.kappa = kappa
        self._cache: Dict[Tuple[Partition, int, int], Fraction] = {}

    @property
    def q(self) -> int:
        return self.F.q

    @property
    def weight_cap(self) -> int:
        # The conjugate-pair term reads exponent n2 of a1 over k2.
        return min(self.genus2.weight_cap, self.genus1_base.weight_cap, 2 * self.genus1_ext.weight_cap)

    def total(self, nu: Partition, n1: int, n2: int) -> Fraction:
        key = (canonical(nu), n1, n2)
        if key not in self._cache:
            self._cache[key] = (a_M2(self.genus2, self.F, *key)
                                + a_A11(self.genus1_base, self.genus1_ext, self.F, *key, kappa=self.kappa))
        return self._cache[key]


def _require(T: CensusTally, stratum: str) -> None:
    if T.stratum != stratum:
        raise StratumMismatch(stratum, T.stratum)
