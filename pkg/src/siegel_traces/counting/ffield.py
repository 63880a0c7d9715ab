# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Table-driven arithmetic in small finite fields of odd characteristic.

An element of F_q, q = p^n, is stored as an integer code 0..q-1: the code of
c_0 + c_1 t + ... + c_{n-1} t^{n-1} (t the class of x modulo the field modulus)
is sum(c_i p^i). Code 0 is zero, code 1 is one and codes 0..p-1 are the prime
field. All arithmetic goes through precomputed numpy tables, so the census can
work on whole arrays of codes at once.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
import sympy
from sympy.abc import x as _x

from siegel_traces.config import FIELD_CAP
from siegel_traces.errors import CapExceeded, EvenCharacteristic, InvalidDegree, NotPrime

logger = logging.getLogger(__name__)

MAX_BASE_DEGREE = 4


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """An immutable, fully tabulated finite field."""
    p: int
    n: int
    modulus: Tuple[int, ...]  # monic, coefficients from degree n down to 0
    digits: np.ndarray = field(repr=False)       # (q, n): F_p coordinates of each code
    exp_table: np.ndarray = field(repr=False)    # (q-1,): code of g^i
    log_table: np.ndarray = field(repr=False)    # (q,): discrete log, -1 for zero
    chi_table: np.ndarray = field(repr=False)    # (q,): quadratic character
    add_table: np.ndarray = field(repr=False)    # (q, q)
    mul_table: np.ndarray = field(repr=False)    # (q, q)
    neg_table: np.ndarray = field(repr=False)    # (q,)

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def id(self) -> Tuple[int, int]:
        return self.p, self.n

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, n={self.n}, q={self.q})"

    # Scalar helpers; the census uses the tables directly.

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        return int(self.exp_table[(-int(self.log_table[a])) % (self.q - 1)])

    def power(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def from_int(self, c: int) -> int:
        """Code of the prime field element c mod p."""
        return c % self.p

    def generator(self) -> int:
        return int(self.exp_table[1]) if self.q > 2 else 1


def quadratic_character(F: FieldSpec, a: int) -> int:
    """0 at zero, +1 on nonzero squares, -1 on non-squares."""
    return int(F.chi_table[a])


def build_field(p: int, n: int, cap: Optional[int] = None) -> FieldSpec:
    """
    Builds F_{p^n} for an odd prime p and 1 <= n <= 4.

    Rebuilding with the same (p, n) gives identical tables: the modulus is the
    lexicographically smallest monic irreducible and the generator is the
    primitive element of smallest code.
    """
    if p == 2:
        raise EvenCharacteristic(p)
    if p < 2 or not sympy.isprime(p):
        raise NotPrime(p)
    if not 1 <= n <= MAX_BASE_DEGREE:
        raise InvalidDegree(n, MAX_BASE_DEGREE)
    return _tabulated_field(p, n, FIELD_CAP if cap is None else cap)


def field_from_order(q: int, cap: Optional[int] = None) -> FieldSpec:
    """Builds the field with q elements, q a power of an odd prime."""
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise NotPrime(q)
    (p, n), = factors.items()
    return build_field(p, n, cap)


def quadratic_extension(F: FieldSpec, cap: Optional[int] = None) -> Tuple[FieldSpec, np.ndarray]:
    """
    Builds k2 = F_{q^2} together with the embedding table of F into it.

    The extension may have degree up to 8 over F_p; only its size is capped.
    """
    F2 = _tabulated_field(F.p, 2 * F.n, FIELD_CAP if cap is None else cap)
    return F2, _embedding(F, F2)


@lru_cache(maxsize=None)
def _tabulated_field(p: int, n: int, cap: int) -> FieldSpec:
    q = p ** n
    if q > cap:
        raise CapExceeded(q, cap)

    modulus = _smallest_irreducible(p, n)
    powers = p ** np.arange(n, dtype=np.int64)
    codes = np.arange(q, dtype=np.int64)
    digits = (codes[:, None] // powers[None, :]) % p

    # Multiplication by t as an F_p-linear map on coordinate vectors.
    low = [(-c) % p for c in reversed(modulus[1:])]  # t^n = sum low[i] t^i
    times_t = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        times_t[i + 1, i] = 1
    times_t[:, n - 1] = low

    exp_table = _primitive_powers(p, n, q, digits, powers, times_t)
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1, dtype=np.int64)

    chi_table = np.where(log_table % 2 == 0, 1, -1).astype(np.int8)
    chi_table[0] = 0

    add_table = (((digits[:, None, :] + digits[None, :, :]) % p) @ powers).astype(np.int32)
    neg_table = (((-digits) % p) @ powers).astype(np.int32)

    logs = log_table.copy()
    logs[0] = 0
    mul_table = exp_table[(logs[:, None] + logs[None, :]) % (q - 1)].astype(np.int32)
    mul_table[0, :] = 0
    mul_table[:, 0] = 0

    for table in (digits, exp_table, log_table, chi_table, add_table, neg_table, mul_table):
        table.setflags(write=False)

    logger.debug(f"Tabulated F_{q} with modulus {modulus}.")
    return FieldSpec(
        p=p, n=n, modulus=modulus, digits=digits, exp_table=exp_table.astype(np.int32),
        log_table=log_table, chi_table=chi_table, add_table=add_table,
        mul_table=mul_table, neg_table=neg_table,
    )


def _smallest_irreducible(p: int, n: int) -> Tuple[int, ...]:
    if n == 1:
        return 1, 0
    for tail in itertools.product(range(p), repeat=n):
        coeffs = (1,) + tail
        if sympy.Poly(coeffs, _x, modulus=p).is_irreducible:
            return coeffs
    raise RuntimeError(f"No irreducible polynomial of degree {n} over F_{p}")


def _primitive_powers(p, n, q, digits, powers, times_t) -> np.ndarray:
    """Powers g^0..g^{q-2} of the primitive element g of smallest code."""
    for g in range(2 if q > 2 else 1, q):
        # Matrix of multiplication by g: sum over coordinates of g of c_j * t^j.
        mult = np.zeros((n, n), dtype=np.int64)
        t_power = np.eye(n, dtype=np.int64)
        for c in digits[g]:
            mult = (mult + c * t_power) % p
            t_power = (times_t @ t_power) % p
        vec = np.zeros(n, dtype=np.int64)
        vec[0] = 1
        table = np.empty(q - 1, dtype=np.int64)
        order = 0
        for i in range(q - 1):
            table[i] = int(vec @ powers)
            vec = (mult @ vec) % p
            if table[i] == 1 and i > 0:
                break
            order = i + 1
        if order == q - 1:
            return table
    raise RuntimeError(f"No primitive element in F_{q}")


def _embedding(F: FieldSpec, F2: FieldSpec) -> np.ndarray:
    """Codes in F2 of the elements of F, via the smallest-code root of F's modulus."""
    q2 = F2.q
    values = np.zeros(q2, dtype=np.int64)
    every = np.arange(q2, dtype=np.int64)
    for c in F.modulus:  # Horner, highest coefficient first
        values = F2.add_table[F2.mul_table[values, every], c % F.p]
    roots = np.flatnonzero(values == 0)
    if roots.size == 0:
        raise RuntimeError(f"Modulus of F_{F.q} has no root in F_{q2}")
    root = int(roots[0])

    root_powers = [1]
    for _ in range(F.n - 1):
        root_powers.append(F2.mul(root_powers[-1], root))
    embed = np.zeros(F.q, dtype=np.int32)
    for code in range(F.q):
        value = 0
        for j, digit in enumerate(F.digits[code]):
            value = F2.add(value, F2.mul(int(digit), root_powers[j]))
        embed[code] = value
    embed.setflags(write=False)
    return embed
