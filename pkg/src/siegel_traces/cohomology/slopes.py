# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Newton slopes of the spinor polynomial of a Siegel eigenform of weight
(l-m, m+3) at p:

    1 - lambda(p) X + c2 X^2 - lambda(p) p^(l+m+3) X^3 + p^(2l+2m+6) X^4

The eigenvalue tables print lambda(p^2) so that c2 = lambda(p)^2 + lambda(p^2)
- p^(l+m+2) ("tabulated"); the textbook normalization has c2 = lambda(p)^2
- lambda(p^2) - p^(l+m+2) ("andrianov").
"""
from fractions import Fraction
from typing import List, Tuple

import sympy

CONVENTION_TABULATED = "tabulated"
CONVENTION_ANDRIANOV = "andrianov"


def spinor_coefficients(l: int, m: int, p: int, lam_p: int, lam_p2: int,
                        convention: str = CONVENTION_TABULATED) -> List[int]:
    w = l + m + 3
    if convention == CONVENTION_TABULATED:
        c2 = lam_p * lam_p + lam_p2 - p ** (w - 1)
    elif convention == CONVENTION_ANDRIANOV:
        c2 = lam_p * lam_p - lam_p2 - p ** (w - 1)
    else:
        raise ValueError(f"Unknown convention '{convention}'.")
    return [1, -lam_p, c2, -lam_p * p ** w, p ** (2 * w)]


def lower_hull(points: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Lower convex hull of points sorted by x (monotone chain)."""
    hull: List[Tuple[int, int]] = []
    for x, y in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or above the chord
            if (y2 - y1) * (x - x1) >= (y - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((x, y))
    return hull


def newton_slopes(l: int, m: int, p: int, lam_p: int, lam_p2: int,
                  convention: str = CONVENTION_TABULATED) -> List[Fraction]:
    """p-adic slopes of the spinor polynomial with multiplicity, in increasing order."""
    coeffs = spinor_coefficients(l, m, p, lam_p, lam_p2, convention)
    points = [(i, int(sympy.multiplicity(p, c))) for i, c in enumerate(coeffs) if c != 0]
    hull = lower_hull(points)
    slopes: List[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y2 - y1, x2 - x1)] * (x2 - x1))
    return slopes
