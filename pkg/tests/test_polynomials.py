# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import pytest

from siegel_traces.counting.ffield import field_from_order
from siegel_traces.counting.polynomials import (
    count_curve_points, factor_degree_partition, is_squarefree, poly_divmod, poly_mul, poly_powmod, X,
)
from siegel_traces.errors import NotSquarefree

F5 = field_from_order(5)

X_CUBED_MINUS_X = (0, 4, 0, 1)
X_FIFTH_MINUS_X = (0, 4, 0, 0, 0, 1)


def test_squarefree():
    assert is_squarefree(F5, X_CUBED_MINUS_X)
    assert not is_squarefree(F5, (0, 0, 1))
    assert not is_squarefree(F5, poly_mul(F5, (2, 1), poly_mul(F5, (2, 1), (0, 1))))


def test_divmod_inverts_mul():
    f = (1, 2, 3, 1)
    g = (4, 1)
    quotient, remainder = poly_divmod(F5, poly_mul(F5, f, g), g)
    assert quotient == f
    assert remainder == ()


def test_frobenius_fixes_x_modulo_split_polynomial():
    assert poly_powmod(F5, X, 5, X_FIFTH_MINUS_X) == X


@pytest.mark.parametrize("f, expected", [
    (X_CUBED_MINUS_X, (1, 1, 1)),
    ((2, 0, 1), (2,)),             # x^2 + 2, and -2 is not a square mod 5
    ((3, 0, 0, 1), (2, 1)),        # x^3 + 3 has the single root 3
    (X_FIFTH_MINUS_X, (1, 1, 1, 1, 1)),
])
def test_factor_degree_partition(f, expected):
    assert factor_degree_partition(F5, f) == tuple(sorted(expected, reverse=True))


def test_point_counts():
    # y^2 = x^3 - x over F_5: three 2-torsion points, four more affine points, one at infinity
    assert count_curve_points(F5, X_CUBED_MINUS_X, 3) == 8
    # y^2 = x^5 - x: every x is a root
    assert count_curve_points(F5, X_FIFTH_MINUS_X, 5) == 6


def test_point_count_needs_squarefree():
    with pytest.raises(NotSquarefree):
        count_curve_points(F5, (0, 0, 0, 1), 3)
