# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
from fractions import Fraction

import pytest

from siegel_traces.counting.ffield import field_from_order
from siegel_traces.counting.masses import (
    KAPPA_DOUBLE, KAPPA_LITERAL, StackCounts, a_A11, a_M2, b_mass, gl2_order, half_partition,
)
from siegel_traces.errors import StratumMismatch, TallyError

IDENTITY = (1, 1, 1, 1, 1, 1)


def test_gl2_order():
    assert gl2_order(3) == 48
    assert gl2_order(5) == 480


def test_genus2_mass_of_split_curve(tallies):
    F = field_from_order(5)
    genus2, _, _ = tallies(5)
    # only y^2 = x^5 - x contributes; it has 6 points over F_25, so a2 = 26 - 6 = 20
    assert a_M2(genus2, F, IDENTITY, 0, 0) == Fraction(1, 120)
    assert a_M2(genus2, F, IDENTITY, 0, 1) == Fraction(1, 6)


def test_half_partition():
    assert half_partition((2, 2, 2)) == (1, 1, 1)
    assert half_partition((4, 2)) == (2, 1)
    assert half_partition((6,)) == (3,)


def test_conjugate_pair_term_depends_on_kappa(tallies):
    F = field_from_order(3)
    _, base, extension = tallies(3)
    nu = (2, 2, 2)
    literal = a_A11(base, extension, F, nu, 0, 2, kappa=KAPPA_LITERAL)
    double = a_A11(base, extension, F, nu, 0, 2, kappa=KAPPA_DOUBLE)
    assert double - literal == Fraction(3, 2) * b_mass(extension, (1, 1, 1), 2, 0)
    # no pair term once n1 > 0
    assert (a_A11(base, extension, F, nu, 2, 2, kappa=KAPPA_LITERAL)
            == a_A11(base, extension, F, nu, 2, 2, kappa=KAPPA_DOUBLE))


def test_strata_are_checked(tallies):
    F = field_from_order(3)
    genus2, base, extension = tallies(3)
    with pytest.raises(StratumMismatch):
        a_M2(base, F, IDENTITY, 0, 0)
    with pytest.raises(TallyError):
        StackCounts(F, genus2, base, base)
    with pytest.raises(ValueError):
        StackCounts(F, genus2, base, extension, kappa="triple")


def test_stack_counts_cache_and_weight(counts_for):
    counts = counts_for(3, KAPPA_LITERAL)
    assert counts.q == 3
    assert counts.weight_cap >= 10
    assert counts.total((6,), 2, 0) is counts.total((6,), 2, 0)
