# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
from fractions import Fraction

import pytest

from siegel_traces.characters.symfunc import (
    PARTITIONS_6, REP_A_PRIME, REP_B_PRIME, REP_C_PRIME, contraction_for, laurent_from_power_sums,
    partitions_of, s, s6_character, s6_dim, sp4_dim, sp4_power_sum_coeffs, sp4_weyl_character,
    young_invariant_multiplicity, z_order,
)
from siegel_traces.errors import OddWeight

IDENTITY = (1, 1, 1, 1, 1, 1)


# ---------------------------------------------------------
# S6 characters
# ---------------------------------------------------------

def test_partition_counts():
    assert len(PARTITIONS_6) == 11
    assert len(partitions_of(3)) == 3
    assert sum(720 // z_order(nu) for nu in PARTITIONS_6) == 720


def test_row_orthogonality():
    for mu in PARTITIONS_6:
        for lam in PARTITIONS_6:
            inner = sum(Fraction(s6_character(mu, nu) * s6_character(lam, nu), z_order(nu)) for nu in PARTITIONS_6)
            assert inner == (1 if mu == lam else 0)


def test_regular_representation():
    for nu in PARTITIONS_6:
        total = sum(s6_dim(mu) * s6_character(mu, nu) for mu in PARTITIONS_6)
        assert total == (720 if nu == IDENTITY else 0)


@pytest.mark.parametrize("mu, dim", [((6,), 1), ((5, 1), 5), ((4, 2), 9), ((3, 3), 5), ((3, 2, 1), 16),
                                     ((2, 2, 1, 1), 9), ((3, 1, 1, 1), 10), (IDENTITY, 1)])
def test_dimensions(mu, dim):
    assert s6_dim(mu) == dim


def test_sign_character():
    assert s6_character(IDENTITY, (2, 1, 1, 1, 1)) == -1
    assert s6_character(IDENTITY, (3, 1, 1, 1)) == 1


def test_young_invariants():
    for mu in PARTITIONS_6:
        assert young_invariant_multiplicity(mu, 6) == s6_dim(mu)
        assert young_invariant_multiplicity(mu, 0) == (1 if mu == (6,) else 0)
        assert young_invariant_multiplicity(mu, 1) == (1 if mu in ((6,), (5, 1)) else 0)


def test_rep_vectors():
    assert REP_A_PRIME.dim() == 15
    assert REP_B_PRIME.dim() == 30
    assert REP_C_PRIME.dim() == 15
    rep = s(4, 2) * 2 - s(6)
    assert rep[(4, 2)] == 2
    assert rep.contract(contraction_for((6,))) == -1
    assert rep.contract(contraction_for("full")) == 17
    assert rep.contract(contraction_for(("w", 1))) == -1


# ---------------------------------------------------------
# Sp(4) characters
# ---------------------------------------------------------

def test_sp4_dimension_from_power_sums():
    for total in range(0, 21, 2):
        for m in range(total // 2 + 1):
            l = total - m
            beta = sp4_power_sum_coeffs(l, m)
            # p1 = p2 = 4 at the identity
            assert sum(c * 4 ** (n1 + n2) for (n1, n2), c in beta.items()) == sp4_dim(l, m)


@pytest.mark.parametrize("l, m", [(1, 1), (2, 0), (4, 2), (5, 3)])
def test_power_sums_reproduce_the_weyl_character(l, m):
    chi = sp4_weyl_character(l, m)
    assert laurent_from_power_sums(sp4_power_sum_coeffs(l, m)) == {k: Fraction(v) for k, v in chi.items()}


def test_small_cases():
    assert sp4_power_sum_coeffs(0, 0) == {(0, 0): Fraction(1)}
    assert sp4_dim(1, 1) == 5
    assert sp4_dim(2, 0) == 10
    with pytest.raises(OddWeight):
        sp4_power_sum_coeffs(1, 0)
