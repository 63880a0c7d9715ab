# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import numpy as np
import pytest

from siegel_traces.counting.ffield import (
    build_field, field_from_order, quadratic_character, quadratic_extension,
)
from siegel_traces.errors import CapExceeded, EvenCharacteristic, InvalidDegree, NotPrime


# ---------------------------------------------------------
# Construction
# ---------------------------------------------------------

def test_even_characteristic_is_refused():
    with pytest.raises(EvenCharacteristic):
        build_field(2, 1)
    with pytest.raises(EvenCharacteristic):
        field_from_order(2)


def test_non_prime_and_bad_degree():
    with pytest.raises(NotPrime):
        build_field(9, 1)
    with pytest.raises(NotPrime):
        field_from_order(15)
    with pytest.raises(InvalidDegree):
        build_field(3, 5)


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        build_field(5, 2, cap=24)


def test_rebuild_is_deterministic():
    a = build_field(3, 2, cap=100)
    b = build_field(3, 2, cap=200)
    assert a.modulus == b.modulus
    assert np.array_equal(a.exp_table, b.exp_table)
    assert np.array_equal(a.mul_table, b.mul_table)


# ---------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------

@pytest.mark.parametrize("q", [3, 9, 25])
def test_inverses_and_generator(q):
    F = field_from_order(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
    powers = {F.power(F.generator(), e) for e in range(q - 1)}
    assert powers == set(range(1, q))


def test_distributivity_in_f9():
    F = field_from_order(9)
    for a in range(9):
        for b in range(9):
            for c in range(9):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", [5, 7, 9])
def test_quadratic_character(q):
    F = field_from_order(q)
    values = [quadratic_character(F, a) for a in range(q)]
    assert values[0] == 0
    assert values.count(1) == values.count(-1) == (q - 1) // 2
    for a in range(1, q):
        assert quadratic_character(F, F.mul(a, a)) == 1


def test_embedding_into_quadratic_extension():
    F = field_from_order(3)
    F2, embed = quadratic_extension(F)
    assert F2.q == 9
    for a in range(3):
        for b in range(3):
            assert embed[F.mul(a, b)] == F2.mul(int(embed[a]), int(embed[b]))
            assert embed[F.add(a, b)] == F2.add(int(embed[a]), int(embed[b]))
    # every element of F becomes a square in F_{q^2}
    assert all(quadratic_character(F2, int(embed[a])) == 1 for a in range(1, 3))
