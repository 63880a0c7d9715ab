# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Published reference values: the e_c table of V_{l,m} on A_2[2], the Hecke
eigenvalue columns of four Siegel eigenspaces and the Newton slope table.

Integers are kept as signed factorizations, the way they are printed, and
expanded on import.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Tuple

from siegel_traces.characters.symfunc import Partition
from siegel_traces.cohomology.motive import CuspSymbol, MotiveExpr, SiegelSymbol, UNIT

Factored = Tuple[int, Dict[int, int]]


def expand(factored: Factored) -> int:
    sign, factors = factored
    return sign * prod(p ** e for p, e in factors.items())


# --- e_c table ---

def _phi(N: int, k: int) -> CuspSymbol:
    return CuspSymbol(N, k, "new")


def _expr(*terms) -> MotiveExpr:
    """terms: (coefficient, power of L, symbol or None)."""
    expr = MotiveExpr()
    for c, power, symbol in terms:
        expr = expr + MotiveExpr.symbol(symbol or UNIT, c, power)
    return expr


@dataclass(frozen=True)
class TableRow:
    l: int
    m: int
    expr: MotiveExpr
    gated: bool
    note: str = ""

    @property
    def has_siegel_part(self) -> bool:
        return bool(self.expr.siegel_part())


E_C_ROWS: List[TableRow] = [
    TableRow(0, 0, _expr((1, 3, None), (1, 2, None), (-14, 1, None), (16, 0, None)), gated=True),
    TableRow(2, 0, _expr((-30, 1, None), (30, 0, None)), gated=True),
    TableRow(1, 1, _expr((5, 3, None), (-10, 2, None)), gated=False,
             note="l = m: the printed row omits the constant -15 of the dim S_2 convention"),
    TableRow(4, 0, _expr((-45, 1, None), (45, 0, None), (-10, 1, _phi(4, 6))), gated=True),
    TableRow(3, 1, _expr((-30, 2, None), (-15, 0, _phi(4, 6))), gated=True),
    TableRow(2, 2, _expr((9, 4, None), (-21, 3, None), (-1, 0, _phi(2, 8))), gated=False),
    TableRow(6, 0, _expr((-60, 1, None), (60, 0, None), (-31, 1, _phi(2, 8)), (-1, 0, _phi(2, 10))),
             gated=True),
    TableRow(5, 1, _expr((-45, 2, None), (15, 0, None), (-30, 0, _phi(2, 8)), (-20, 2, _phi(4, 6)),
                         (-5, 0, _phi(4, 10))), gated=True,
             note="printed with L*Phi_4,6; the endoscopic term is L^2*Phi_4,6"),
    TableRow(4, 2, _expr((-45, 3, None), (45, 0, None), (-1, 0, SiegelSymbol(2, 5))), gated=False),
    TableRow(3, 3, _expr((10, 5, None), (-35, 4, None), (-15, 0, _phi(4, 6)), (-5, 0, _phi(2, 10))),
             gated=False),
    TableRow(8, 0, _expr((-75, 1, None), (75, 0, None), (-25, 1, _phi(4, 10)), (-40, 1, _phi(2, 10)),
                         (-5, 0, _phi(4, 12))), gated=True),
    TableRow(7, 1, _expr((-60, 2, None), (30, 0, None), (-15, 0, _phi(4, 10)), (-30, 0, _phi(2, 10)),
                         (-40, 2, _phi(2, 8)), (-1, 0, SiegelSymbol(6, 4))), gated=False),
    TableRow(6, 2, _expr((-60, 3, None), (60, 0, None), (-20, 3, _phi(4, 6)), (-1, 0, SiegelSymbol(4, 5))),
             gated=False),
    TableRow(5, 3, _expr((-60, 4, None), (-30, 0, _phi(2, 8)), (-1, 0, SiegelSymbol(2, 6))), gated=False),
    TableRow(4, 4, _expr((15, 6, None), (-45, 5, None), (30, 0, None), (-15, 0, _phi(4, 6)),
                         (-5, 0, _phi(4, 12))), gated=False),
]

E_C_TABLE: Dict[Tuple[int, int], TableRow] = {(row.l, row.m): row for row in E_C_ROWS}


# --- Siegel eigenvalues ---

@dataclass(frozen=True)
class EigenColumn:
    """lambda(p) on S_{j,k}(Gamma_2[2])^mu, which sits in V_{l,m} with l = j+k-3, m = k-3."""
    j: int
    k: int
    mu: Partition
    values: Dict[int, Factored] = field(repr=False)

    @property
    def lm(self) -> Tuple[int, int]:
        return self.j + self.k - 3, self.k - 3

    @property
    def label(self) -> str:
        return f"S_{self.j},{self.k}^[{','.join(map(str, self.mu))}]"

    def eigenvalue(self, p: int) -> int:
        return expand(self.values[p])


EIGEN_COLUMNS: List[EigenColumn] = [
    EigenColumn(2, 5, (2, 2, 1, 1), {
        3: (-1, {2: 3, 5: 1}),
        5: (-1, {2: 2, 5: 2, 13: 1}),
        7: (1, {2: 4, 3: 1, 5: 1, 13: 1}),
        11: (1, {2: 3, 11: 1, 13: 1, 31: 1}),
        13: (-1, {2: 2, 5: 1, 3469: 1}),
        17: (1, {2: 3, 5: 2, 11: 1, 13: 1, 17: 1}),
        19: (-1, {2: 4, 5: 1, 13: 1, 311: 1}),
    }),
    EigenColumn(6, 4, (2, 2, 1, 1), {
        3: (-1, {2: 3, 5: 1, 7: 1}),
        5: (-1, {2: 2, 5: 1, 149: 1}),
        7: (-1, {2: 4, 3: 1, 5: 1, 401: 1}),
        11: (1, {2: 3, 36383: 1}),
        13: (1, {2: 2, 5: 1, 37: 1, 251: 1}),
        17: (-1, {2: 3, 5: 1, 29: 1, 6287: 1}),
        19: (-1, {2: 4, 5: 1, 43: 1, 2267: 1}),
    }),
    EigenColumn(6, 4, (3, 1, 1, 1), {
        3: (-1, {2: 3, 3: 1}),
        5: (1, {2: 2, 3: 2, 7: 1, 41: 1}),
        7: (1, {2: 4, 5: 2, 73: 1}),
        11: (-1, {2: 3, 3: 2, 4793: 1}),
        13: (-1, {2: 2, 7: 1, 21563: 1}),
        17: (-1, {2: 3, 7: 1, 11: 1, 37: 1, 383: 1}),
        19: (-1, {2: 4, 3: 2, 11: 1, 17: 1, 29: 1, 43: 1}),
    }),
    EigenColumn(10, 3, (2, 2, 1, 1), {
        3: (1, {2: 3, 5: 2}),
        5: (1, {2: 2, 5: 1, 127: 1}),
        7: (-1, {2: 4, 3: 1, 5: 2, 13: 1}),
        11: (-1, {2: 3, 439: 1, 1123: 1}),
        13: (1, {2: 2, 5: 2, 47: 1, 4457: 1}),
        17: (1, {2: 3, 5: 1, 7: 1, 461: 1, 1723: 1}),
        19: (1, {2: 4, 5: 2, 3653483: 1}),
    }),
]


def eigen_column(j: int, k: int, mu: Partition) -> Optional[EigenColumn]:
    for column in EIGEN_COLUMNS:
        if (column.j, column.k, column.mu) == (j, k, tuple(mu)):
            return column
    return None


# --- Newton slopes ---

@dataclass(frozen=True)
class SlopeRow:
    """lambda(p), lambda(p^2) on S_{2,6}(Gamma_2[2])^mu and the printed slopes; gated applies to the slopes only."""
    mu: Partition
    p: int
    lam_p: Factored
    lam_p2: Factored
    slopes: Tuple[Fraction, ...]
    gated: bool = True
    note: str = ""

    @property
    def lm(self) -> Tuple[int, int]:
        return 5, 3


SLOPE_ROWS: List[SlopeRow] = [
    SlopeRow((3, 1, 1, 1), 3, (1, {2: 3, 3: 3}), (-1, {2: 2, 3: 6, 107: 1}),
             tuple(Fraction(s) for s in (3, 3, 8, 8))),
    SlopeRow((3, 1, 1, 1), 5, (-1, {2: 2, 3: 4, 17: 1}), (1, {2: 2, 181: 1, 26161: 1}),
             tuple(Fraction(11, 2) for _ in range(4)), gated=False,
             note="lambda(5) is a 5-adic unit, so slope 0 occurs; the printed 11/2 is not a Newton slope"),
    SlopeRow((3, 2, 1), 3, (-1, {2: 3, 3: 2, 5: 1}), (1, {3: 4, 1753: 1}),
             tuple(Fraction(s) for s in (2, 2, 9, 9))),
    SlopeRow((3, 2, 1), 5, (1, {2: 2, 3: 1, 5: 1, 7: 2}), (1, {5: 2, 117119: 1}),
             tuple(Fraction(s) for s in (1, 1, 10, 10))),
]
