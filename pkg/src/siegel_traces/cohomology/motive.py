# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Formal motive expressions: sums of c * L^e * S, where S is the unit, a space of
elliptic cusp forms or a space of Siegel cusp forms, and c is an integer or a
virtual S6 representation.

Frobenius at q = p^r sends L to q and a space of elliptic cusp forms to the sum
of alpha^r + beta^r over its newforms. Rep-valued coefficients have to be
contracted to integers first (by dimension, by one isotypic component, or by
invariants of a Young subgroup).
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple, Union

import sympy

from siegel_traces.characters.symfunc import RepVector, contraction_for
from siegel_traces.errors import MissingEigenData
from siegel_traces.modforms.dimensions import dim_cusp, dim_new

logger = logging.getLogger(__name__)

Coefficient = Union[int, RepVector]


@dataclass(frozen=True)
class UnitSymbol:
    def sort_key(self) -> tuple:
        return (0,)

    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class CuspSymbol:
    """S[Gamma_0(N), k] ("full"), its new part ("new") or a w_2-eigenspace ("plus" / "minus")."""
    level: int
    weight: int
    part: str = "new"

    def sort_key(self) -> tuple:
        return 1, self.level, self.weight, ("full", "new", "plus", "minus").index(self.part)

    def __str__(self) -> str:
        if self.part == "full":
            return f"S[G0({self.level}),{self.weight}]"
        if self.part == "new":
            return f"Phi_{self.level},{self.weight}"
        sign = "+" if self.part == "plus" else "-"
        return f"S{sign}[G0(2),{self.weight}]"


@dataclass(frozen=True)
class SiegelSymbol:
    """S[Gamma_2[2], (j, k)]: only ever measured, never evaluated from first principles."""
    j: int
    k: int

    def sort_key(self) -> tuple:
        return 2, self.j, self.k

    def __str__(self) -> str:
        return f"S[G2[2],({self.j},{self.k})]"


Symbol = Union[UnitSymbol, CuspSymbol, SiegelSymbol]
UNIT = UnitSymbol()
Key = Tuple[int, Symbol]


def _is_zero(c: Coefficient) -> bool:
    return not c


class MotiveExpr:
    """Sum of coefficient * L^tate_power * symbol, kept without zero terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Key, Coefficient]] = None):
        self.terms: Dict[Key, Coefficient] = {k: c for k, c in (terms or {}).items() if not _is_zero(c)}

    # --- Construction ---

    @classmethod
    def constant(cls, c: Coefficient) -> "MotiveExpr":
        return cls({(0, UNIT): c})

    @classmethod
    def tate(cls, e: int, c: Coefficient = 1) -> "MotiveExpr":
        return cls({(e, UNIT): c})

    @classmethod
    def symbol(cls, symbol: Symbol, c: Coefficient = 1, tate_power: int = 0) -> "MotiveExpr":
        return cls({(tate_power, symbol): c})

    # --- Arithmetic ---

    def __add__(self, other: "MotiveExpr") -> "MotiveExpr":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return MotiveExpr(terms)

    def __neg__(self) -> "MotiveExpr":
        return MotiveExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MotiveExpr") -> "MotiveExpr":
        return self + (-other)

    def __mul__(self, c: int) -> "MotiveExpr":
        return MotiveExpr({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def times_tate(self, e: int) -> "MotiveExpr":
        """Multiplication by L^e."""
        return MotiveExpr({(power + e, symbol): c for (power, symbol), c in self.terms.items()})

    def times_polynomial(self, poly: "MotiveExpr") -> "MotiveExpr":
        """Product with an integer polynomial in L (an expression with only unit symbols)."""
        out = MotiveExpr()
        for (power, symbol), c in poly.terms.items():
            if symbol != UNIT or isinstance(c, RepVector):
                raise TypeError("times_polynomial needs an integer polynomial in L")
            out = out + self.times_tate(power) * c
        return out

    def tensor(self, rep: RepVector) -> "MotiveExpr":
        """rep (x) self, for an expression with integer coefficients."""
        if self.is_rep_valued:
            raise TypeError("tensor needs integer coefficients")
        return MotiveExpr({k: rep * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MotiveExpr):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # --- Inspection ---

    @property
    def is_rep_valued(self) -> bool:
        return any(isinstance(c, RepVector) for c in self.terms.values())

    def items(self) -> Iterator[Tuple[int, Symbol, Coefficient]]:
        for (power, symbol), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1].sort_key(), -kv[0][0])):
            yield power, symbol, c

    def siegel_part(self) -> "MotiveExpr":
        return MotiveExpr({k: c for k, c in self.terms.items() if isinstance(k[1], SiegelSymbol)})

    def without_siegel(self) -> "MotiveExpr":
        return MotiveExpr({k: c for k, c in self.terms.items() if not isinstance(k[1], SiegelSymbol)})

    def contract(self, target="full") -> "MotiveExpr":
        """Integer expression from a rep-valued one; see contraction_for for the targets."""
        weights = contraction_for(target)
        return MotiveExpr({k: c.contract(weights) if isinstance(c, RepVector) else c
                           for k, c in self.terms.items()})

    def dim(self) -> "MotiveExpr":
        return self.contract("full")

    def expand_full(self) -> "MotiveExpr":
        """Replaces every full space S[Gamma_0(N), k] by its newform parts."""
        out = MotiveExpr()
        for (power, symbol), c in self.terms.items():
            if isinstance(symbol, CuspSymbol) and symbol.part == "full":
                out = out + _scaled(full_space_expansion(symbol.level, symbol.weight).times_tate(power), c)
            else:
                out = out + MotiveExpr({(power, symbol): c})
        return out

    def split_signs(self) -> "MotiveExpr":
        """Replaces S[Gamma_0(2),k]^new by S+ + S-."""
        out = MotiveExpr()
        for (power, symbol), c in self.terms.items():
            if isinstance(symbol, CuspSymbol) and symbol.level == 2 and symbol.part == "new":
                for part in ("plus", "minus"):
                    out = out + MotiveExpr({(power, CuspSymbol(2, symbol.weight, part)): c})
            else:
                out = out + MotiveExpr({(power, symbol): c})
        return out

    def evaluate(self, q: int, tracer: "MotiveTracer", target="full") -> int:
        expr = self.contract(target) if self.is_rep_valued else self
        return sum(c * q ** power * tracer.trace(symbol, q) for (power, symbol), c in expr.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for power, symbol, c in self.items():
            tate = "" if power == 0 else ("L" if power == 1 else f"L^{power}")
            base = "*".join(x for x in (tate, "" if symbol == UNIT else str(symbol)) if x) or "1"
            coeff = f"({c})" if isinstance(c, RepVector) else str(c)
            parts.append(f"{coeff}*{base}")
        return " + ".join(parts)

    __repr__ = __str__


def _scaled(expr: MotiveExpr, c: Coefficient) -> MotiveExpr:
    return MotiveExpr({k: c * v for k, v in expr.terms.items()})


ZERO = MotiveExpr()


def full_space_expansion(N: int, k: int) -> MotiveExpr:
    """S[Gamma_0(4),k] = Phi_4,k + 2 Phi_2,k + 3 S[1,k] and S[Gamma_0(2),k] = Phi_2,k + 2 S[1,k]."""
    multiplicity = {1: {1: 1}, 2: {2: 1, 1: 2}, 4: {4: 1, 2: 2, 1: 3}}[N]
    out = MotiveExpr()
    for level, c in multiplicity.items():
        out = out + cusp_motive(level, k, "new") * c
    return out


def cusp_motive(N: int, k: int, part: str = "new") -> MotiveExpr:
    """
    The motive of a space of cusp forms, with the weight-2 convention
    S[Gamma, 2] := -L - 1 for full spaces (all new parts of weight 2 vanish here).
    Spaces without forms give zero.
    """
    if part == "full" and k == 2:
        return MotiveExpr({(1, UNIT): -1, (0, UNIT): -1})
    if part == "full":
        return MotiveExpr.symbol(CuspSymbol(N, k, "full")) if dim_cusp(N, k) else ZERO
    if part == "new" and N == 1:
        return MotiveExpr.symbol(CuspSymbol(1, k, "new")) if dim_cusp(1, k) else ZERO
    return MotiveExpr.symbol(CuspSymbol(N, k, part)) if dim_new(N, k) else ZERO


ELLIPTIC_FROBENIUS = "frobenius"
ELLIPTIC_HECKE = "hecke"


class MotiveTracer:
    """
    Frobenius traces of the symbols, from an EigenStore.

    At q = p^r an elliptic space contributes alpha^r + beta^r per newform
    ("frobenius"), or the Hecke coefficient a(p^r) ("hecke"), the convention
    behind the tabulated lambda(p^2).
    """

    def __init__(self, store, siegel_traces: Optional[Dict[Tuple[SiegelSymbol, int], int]] = None,
                 elliptic: str = ELLIPTIC_FROBENIUS):
        if elliptic not in (ELLIPTIC_FROBENIUS, ELLIPTIC_HECKE):
            raise ValueError(f"Unknown elliptic trace convention '{elliptic}'.")
        self.store = store
        self.siegel_traces = dict(siegel_traces or {})
        self.elliptic = elliptic

    def with_hecke_coefficients(self) -> "MotiveTracer":
        return MotiveTracer(self.store, self.siegel_traces, ELLIPTIC_HECKE)

    def trace(self, symbol: Symbol, q: int) -> int:
        if symbol == UNIT:
            return 1
        if isinstance(symbol, SiegelSymbol):
            try:
                return self.siegel_traces[(symbol, q)]
            except KeyError:
                raise MissingEigenData(f"No trace of Frobenius known for {symbol} at q = {q}.") from None
        (p, r), = sympy.factorint(q).items()
        if symbol.part == "full":
            return full_space_expansion(symbol.level, symbol.weight).evaluate(q, self)
        if self.elliptic == ELLIPTIC_HECKE:
            return self.store.hecke_trace(symbol.level, symbol.weight, symbol.part, p, r)
        return self.store.frobenius_trace(symbol.level, symbol.weight, symbol.part, p, r)


def motive_trace(expr: MotiveExpr, q: int, tracer: MotiveTracer, target="full") -> int:
    """Frobenius trace of expr at q, rep coefficients contracted against target."""
    return expr.evaluate(q, tracer, target)
