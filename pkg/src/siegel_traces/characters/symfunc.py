# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Character data for S6 and Sp(4).

S6: irreducible characters by the Murnaghan-Nakayama rule, centralizer orders,
invariant multiplicities under the Young subgroups S_{6-n}, and RepVector, a
virtual representation stored as multiplicities over the 11 irreducibles.

Sp(4): the Weyl character of highest weight (l, m) rewritten as a polynomial
in the power sums p1 = x + 1/x + y + 1/y and p2 = x^2 + 1/x^2 + y^2 + 1/y^2.
Everything is exact; rationals are fractions.Fraction.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import sympy

from siegel_traces.errors import OddWeight

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]
Laurent = Dict[Tuple[int, int], int]


def partitions_of(n: int, largest: Optional[int] = None) -> List[Partition]:
    """Partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


PARTITIONS_6: Tuple[Partition, ...] = tuple(partitions_of(6))
PARTITIONS_3: Tuple[Partition, ...] = tuple(partitions_of(3))
IDENTITY_CLASS: Partition = (1,) * 6


def canonical(parts: Iterable[int]) -> Partition:
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


# --- Symmetric group characters ---

def s6_character(mu: Partition, nu: Partition) -> int:
    """chi^mu on the class of cycle type nu."""
    return character(canonical(mu), canonical(nu))


@lru_cache(maxsize=None)
def character(mu: Partition, nu: Partition) -> int:
    if sum(mu) != sum(nu):
        raise ValueError(f"{mu} and {nu} are partitions of different integers")
    r = len(mu)
    beta = tuple(sorted(mu[i] + (r - 1 - i) for i in range(r)))
    return _murnaghan_nakayama(beta, nu)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(beta: Tuple[int, ...], nu: Partition) -> int:
    # A rim hook of length k is removed by moving one bead of the beta-set down by k.
    if not nu:
        return 1
    k, rest = nu[0], nu[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        crossed = sum(1 for c in beta if target < c < b)
        moved = tuple(sorted((beads - {b}) | {target}))
        total += (-1) ** crossed * _murnaghan_nakayama(moved, rest)
    return total


def z_order(nu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type nu."""
    z = 1
    for part in set(nu):
        mult = nu.count(part)
        z *= part ** mult * factorial(mult)
    return z


def s6_dim(mu: Partition) -> int:
    mu = canonical(mu)
    return character(mu, (1,) * sum(mu))


def young_invariant_multiplicity(mu: Partition, n: int) -> int:
    """Multiplicity of the trivial representation in s[mu] restricted to S_{6-n}."""
    if not 0 <= n <= 6:
        raise ValueError("n must lie in 0..6")
    total = Fraction(0)
    for rho in partitions_of(6 - n):
        total += Fraction(s6_character(mu, canonical(rho + (1,) * n)), z_order(rho))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral invariant multiplicity {total} for {mu}, n={n}")
    return int(total)


# --- Virtual S6 representations ---

@dataclass(frozen=True)
class RepVector:
    """A virtual representation of S6: multiplicities in PARTITIONS_6 order."""
    mult: Tuple[int, ...] = (0,) * len(PARTITIONS_6)

    def __add__(self, other: "RepVector") -> "RepVector":
        return RepVector(tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other: "RepVector") -> "RepVector":
        return RepVector(tuple(a - b for a, b in zip(self.mult, other.mult)))

    def __neg__(self) -> "RepVector":
        return RepVector(tuple(-a for a in self.mult))

    def __mul__(self, c: int) -> "RepVector":
        return RepVector(tuple(c * a for a in self.mult))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.mult)

    def __getitem__(self, mu: Partition) -> int:
        return self.mult[PARTITIONS_6.index(canonical(mu))]

    def contract(self, weights: Callable[[Partition], int]) -> int:
        return sum(a * weights(mu) for a, mu in zip(self.mult, PARTITIONS_6) if a)

    def dim(self) -> int:
        return self.contract(s6_dim)

    def terms(self) -> List[Tuple[Partition, int]]:
        return [(mu, a) for mu, a in zip(PARTITIONS_6, self.mult) if a]

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{a}*s{list(mu)}" if a != 1 else f"s{list(mu)}" for mu, a in self.terms())


ZERO_REP = RepVector()


def s(*parts: int) -> RepVector:
    """The irreducible representation s[parts] of S6."""
    mult = [0] * len(PARTITIONS_6)
    mult[PARTITIONS_6.index(canonical(parts))] = 1
    return RepVector(tuple(mult))


# Constants of the equivariant Eisenstein formula.
REP_A = s(3, 1, 1, 1) + s(2, 1, 1, 1, 1)
REP_B = s(4, 2) + s(3, 2, 1) + s(2, 2, 2)
REP_C = s(6) + s(5, 1) + s(4, 2)
REP_A_PRIME = s(4, 1, 1) + s(3, 3)
REP_B_PRIME = s(5, 1) + s(4, 2) + s(3, 2, 1)
REP_C_PRIME = s(6) + s(4, 2) + s(2, 2, 2)


def contraction_for(target) -> Callable[[Partition], int]:
    """
    Weights that turn a RepVector into a number: the multiplicity of one
    irreducible (a partition), the total dimension ("full") or the number of
    S_{6-n} invariants (("w", n)).
    """
    if target == "full":
        return s6_dim
    if isinstance(target, tuple) and len(target) == 2 and target[0] == "w":
        n = target[1]
        return lambda mu: young_invariant_multiplicity(mu, n)
    mu = canonical(target)
    return lambda nu: 1 if nu == mu else 0


# --- Sp(4) ---

def sp4_dim(l: int, m: int) -> int:
    return (l - m + 1) * (m + 1) * (l + 2) * (l + m + 3) // 6


def _weyl_orbit(a: int, b: int):
    for e1 in (1, -1):
        for e2 in (1, -1):
            yield (e1 * a, e2 * b), e1 * e2
            yield (e1 * b, e2 * a), -e1 * e2


@lru_cache(maxsize=None)
def sp4_weyl_character(l: int, m: int) -> Laurent:
    """Character of the irreducible Sp(4)-module of highest weight (l, m) as a Laurent polynomial."""
    x, y = sympy.symbols("x y")
    a, b = l + 2, m + 1

    def alternant(u: int, v: int, shift: int) -> sympy.Poly:
        expr = sum(sign * x ** (e1 + shift) * y ** (e2 + shift) for (e1, e2), sign in _weyl_orbit(u, v))
        return sympy.Poly(expr, x, y)

    quotient = alternant(a, b, a).exquo(alternant(2, 1, 2))
    offset = 2 - a
    return {(i + offset, j + offset): int(c) for (i, j), c in quotient.terms()}


_P1: Laurent = {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
_P2: Laurent = {(2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1}


def laurent_mul(f: Laurent, g: Laurent) -> Laurent:
    out: Laurent = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def power_sum_monomial(n1: int, n2: int) -> Laurent:
    """p1^n1 * p2^n2 as a Laurent polynomial."""
    if n1 > 0:
        return laurent_mul(power_sum_monomial(n1 - 1, n2), _P1)
    if n2 > 0:
        return laurent_mul(power_sum_monomial(0, n2 - 1), _P2)
    return {(0, 0): 1}


@lru_cache(maxsize=None)
def sp4_power_sum_coeffs(l: int, m: int) -> Dict[Tuple[int, int], Fraction]:
    """
    beta with chi_{l,m} = sum beta[n1, n2] p1^n1 p2^n2.

    Both sides are Weyl-invariant, so comparing coefficients at the dominant
    weights u >= v >= 0 gives a square triangular system, solved exactly.
    """
    if (l + m) % 2:
        raise OddWeight(l, m)
    if not l >= m >= 0:
        raise ValueError(f"need l >= m >= 0, got ({l}, {m})")
    total = l + m
    monomials = [(n1, n2) for n2 in range(total // 2 + 1) for n1 in range(total - 2 * n2 + 1)
                 if (n1 - total) % 2 == 0]
    weights = [(u, v) for u in range(total + 1) for v in range(u + 1)
               if u + v <= total and (u + v - total) % 2 == 0]
    chi = sp4_weyl_character(l, m)

    matrix = sympy.Matrix([[power_sum_monomial(*mono).get(w, 0) for mono in monomials] for w in weights])
    rhs = sympy.Matrix([chi.get(w, 0) for w in weights])
    solution = matrix.LUsolve(rhs)

    beta = {}
    for mono, value in zip(monomials, solution):
        value = sympy.Rational(value)
        if value != 0:
            beta[mono] = Fraction(int(value.p), int(value.q))
    logger.debug(f"beta for ({l},{m}) has {len(beta)} terms.")
    return beta


def laurent_from_power_sums(beta: Dict[Tuple[int, int], Fraction]) -> Dict[Tuple[int, int], Fraction]:
    out: Dict[Tuple[int, int], Fraction] = {}
    for (n1, n2), c in beta.items():
        for key, v in power_sum_monomial(n1, n2).items():
            out[key] = out.get(key, Fraction(0)) + c * v
    return {k: v for k, v in out.items() if v}
