# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Univariate polynomials over a tabulated field, one polynomial at a time.

A polynomial is a tuple of element codes, lowest degree first, without
trailing zeros (the zero polynomial is the empty tuple). These helpers serve
the scalar reference path (single curves, tests, the CLI); the census has its
own batched versions in census.py.
"""
from typing import List, Sequence, Tuple

from siegel_traces.counting.ffield import FieldSpec, quadratic_character
from siegel_traces.errors import NotSquarefree

Poly = Tuple[int, ...]

X: Poly = (0, 1)


def trim(f: Sequence[int]) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def degree(f: Poly) -> int:
    return len(f) - 1


def poly_add(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    size = max(len(f), len(g))
    f = tuple(f) + (0,) * (size - len(f))
    g = tuple(g) + (0,) * (size - len(g))
    return trim(F.add(a, b) for a, b in zip(f, g))


def poly_sub(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    return poly_add(F, f, tuple(F.neg(b) for b in g))


def poly_scale(F: FieldSpec, c: int, f: Poly) -> Poly:
    return trim(F.mul(c, a) for a in f)


def poly_mul(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def poly_divmod(F: FieldSpec, f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    inv_lead = F.inv(g[-1])
    quot = [0] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g) and rem:
        shift = len(rem) - len(g)
        c = F.mul(rem[-1], inv_lead)
        quot[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
        rem = list(trim(rem))
    return trim(quot), trim(rem)


def poly_mod(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    return poly_divmod(F, f, g)[1]


def make_monic(F: FieldSpec, f: Poly) -> Poly:
    return poly_scale(F, F.inv(f[-1]), f) if f else f


def poly_gcd(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    """Monic gcd (the empty tuple when both inputs are zero)."""
    a, b = trim(f), trim(g)
    while b:
        a, b = b, poly_mod(F, a, b)
    return make_monic(F, a)


def derivative(F: FieldSpec, f: Poly) -> Poly:
    return trim(F.mul(F.from_int(i), c) for i, c in enumerate(f) if i > 0)


def poly_powmod(F: FieldSpec, base: Poly, exponent: int, modulus: Poly) -> Poly:
    result: Poly = (1,)
    base = poly_mod(F, base, modulus)
    while exponent:
        if exponent & 1:
            result = poly_mod(F, poly_mul(F, result, base), modulus)
        base = poly_mod(F, poly_mul(F, base, base), modulus)
        exponent >>= 1
    return result


def poly_eval(F: FieldSpec, f: Poly, a: int) -> int:
    value = 0
    for c in reversed(f):
        value = F.add(F.mul(value, a), c)
    return value


def is_squarefree(F: FieldSpec, f: Poly) -> bool:
    """True iff gcd(f, f') is constant."""
    f = trim(f)
    if degree(f) < 1:
        raise ValueError("is_squarefree needs a polynomial of degree at least 1")
    return degree(poly_gcd(F, f, derivative(F, f))) == 0


def factor_degree_partition(F: FieldSpec, f: Poly) -> Tuple[int, ...]:
    """
    Degrees of the irreducible factors of a squarefree f, largest first.

    Distinct-degree factorization: the product of the irreducible factors of
    degree i is gcd(f, x^{q^i} - x).
    """
    rest = make_monic(F, trim(f))
    parts: List[int] = []
    h = X
    i = 0
    while degree(rest) >= 2 * (i + 1):
        i += 1
        h = poly_powmod(F, h, F.q, rest)
        g = poly_gcd(F, rest, poly_sub(F, h, X))
        if degree(g) > 0:
            parts.extend([i] * (degree(g) // i))
            rest = poly_divmod(F, rest, g)[0]
            h = poly_mod(F, h, rest)
    if degree(rest) > 0:
        parts.append(degree(rest))
    return tuple(sorted(parts, reverse=True))


def count_curve_points(F: FieldSpec, f: Poly, model_degree: int) -> int:
    """
    Number of F-points on the smooth projective model of y^2 = f(x).

    Degree 3 and 5 models have one point at infinity; a degree 6 model has
    1 + chi(leading coefficient) of them.
    """
    f = trim(f)
    if degree(f) != model_degree or model_degree not in (3, 5, 6):
        raise ValueError(f"expected a polynomial of degree {model_degree} (3, 5 or 6)")
    if not is_squarefree(F, f):
        raise NotSquarefree(f)
    affine = sum(1 + quadratic_character(F, poly_eval(F, f, a)) for a in range(F.q))
    at_infinity = 1 + quadratic_character(F, f[-1]) if model_degree == 6 else 1
    return affine + at_infinity
