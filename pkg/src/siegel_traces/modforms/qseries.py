# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Truncated q-expansions with exact coefficients, Eisenstein series and eta quotients.
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from siegel_traces.errors import NonIntegralOffset

Number = Union[int, Fraction]


class QSeries:
    """c_0 + c_1 q + ... + c_{T-1} q^{T-1} + O(q^T)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]):
        self.coeffs: List[Number] = list(coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Number:
        if n >= len(self.coeffs):
            raise IndexError(f"coefficient {n} is beyond the precision {len(self.coeffs)}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        size = min(len(self), len(other))
        return self.coeffs[:size] == other.coeffs[:size]

    def __repr__(self) -> str:
        shown = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs[:8]) if c]
        return " + ".join(shown) + f" + O(q^{len(self)})"

    def truncate(self, precision: int) -> "QSeries":
        return QSeries(self.coeffs[:precision])

    def __add__(self, other: "QSeries") -> "QSeries":
        size = min(len(self), len(other))
        return QSeries(a + b for a, b in zip(self.coeffs[:size], other.coeffs[:size]))

    def __sub__(self, other: "QSeries") -> "QSeries":
        size = min(len(self), len(other))
        return QSeries(a - b for a, b in zip(self.coeffs[:size], other.coeffs[:size]))

    def __neg__(self) -> "QSeries":
        return QSeries(-a for a in self.coeffs)

    def scale(self, c: Number) -> "QSeries":
        return QSeries(c * a for a in self.coeffs)

    def __mul__(self, other: Union["QSeries", Number]) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        size = min(len(self), len(other))
        out = [0] * size
        right = [(j, b) for j, b in enumerate(other.coeffs[:size]) if b]
        for i, a in enumerate(self.coeffs[:size]):
            if not a:
                continue
            for j, b in right:
                if i + j >= size:
                    break
                out[i + j] += a * b
        return QSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        result = QSeries([1] + [0] * (len(self) - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def dilate(self, d: int, precision: int = None) -> "QSeries":
        """f(q) -> f(q^d), keeping `precision` coefficients (as many as are known by default)."""
        precision = d * (len(self) - 1) + 1 if precision is None else precision
        if precision > d * (len(self) - 1) + 1:
            raise ValueError("not enough coefficients to dilate to the requested precision")
        out = [0] * precision
        for i in range(0, precision, d):
            out[i] = self.coeffs[i // d]
        return QSeries(out)

    def shift(self, s: int) -> "QSeries":
        """Multiplication by q^s, keeping the precision."""
        return QSeries([0] * s + self.coeffs[:len(self) - s])

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None for a series known to vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None


def one(precision: int) -> QSeries:
    return QSeries([1] + [0] * (precision - 1))


def eisenstein_series(k: int, precision: int) -> QSeries:
    """E_k normalised with constant term 1, for k = 2, 4, 6 (E_2 is quasi-modular)."""
    constants = {2: -24, 4: 240, 6: -504}
    c = constants[k]
    return QSeries([1] + [c * int(sympy.divisor_sigma(n, k - 1)) for n in range(1, precision)])


def euler_function(precision: int) -> QSeries:
    """prod (1 - q^n), by the pentagonal number theorem."""
    out = [0] * precision
    j = 0
    while True:
        placed = False
        for sign_j in ((j,) if j == 0 else (j, -j)):
            exponent = sign_j * (3 * sign_j - 1) // 2
            if exponent < precision:
                out[exponent] += -1 if sign_j % 2 else 1
                placed = True
        if not placed:
            return QSeries(out)
        j += 1


def series_power(f: QSeries, e: int) -> QSeries:
    """f^e for f with constant term 1 and any integer e (J.C.P. Miller recurrence)."""
    a = f.coeffs
    if a[0] != 1:
        raise ValueError("series_power needs constant term 1")
    size = len(a)
    nonzero = [(k, a[k]) for k in range(1, size) if a[k]]
    b = [1] + [0] * (size - 1)
    for n in range(1, size):
        total = 0
        for k, ak in nonzero:
            if k > n:
                break
            total += ((e + 1) * k - n) * ak * b[n - k]
        value, rem = divmod(total, n)
        b[n] = value if rem == 0 else Fraction(total, n)
    return QSeries(b)


def eta_quotient(factors: Sequence[Tuple[int, int]], precision: int) -> QSeries:
    """q^{sum(d*e)/24} prod_{(d,e)} prod_n (1 - q^{dn})^e to the given precision."""
    order24 = sum(d * e for d, e in factors)
    if order24 % 24:
        raise NonIntegralOffset(f"eta quotient {list(factors)} has q-offset {order24}/24")
    offset = order24 // 24
    if offset < 0:
        raise NonIntegralOffset(f"eta quotient {list(factors)} has a pole at infinity")
    size = max(precision - offset, 1)
    product = one(size)
    for d, e in factors:
        factor = series_power(euler_function(-(-size // d) + 1), e)
        product = product * factor.dilate(d, size)
    return QSeries(([0] * offset + product.coeffs)[:precision])
