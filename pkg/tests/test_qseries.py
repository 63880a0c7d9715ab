# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import pytest

from siegel_traces.errors import NonIntegralOffset
from siegel_traces.modforms.qseries import QSeries, eisenstein_series, eta_quotient, euler_function, series_power


def test_euler_function_and_partitions():
    euler = euler_function(8)
    assert list(euler) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert list(series_power(euler, -1)) == [1, 1, 2, 3, 5, 7, 11, 15]


def test_eisenstein_series():
    assert list(eisenstein_series(4, 4)) == [1, 240, 2160, 6720]
    assert list(eisenstein_series(6, 3)) == [1, -504, -16632]


def test_discriminant():
    delta = eta_quotient([(1, 24)], 6)
    assert list(delta) == [0, 1, -24, 252, -1472, 4830]


def test_level_two_and_four_cusp_forms():
    assert list(eta_quotient([(1, 8), (2, 8)], 8)) == [0, 1, -8, 12, 64, -210, -96, 1016]
    assert list(eta_quotient([(2, 12)], 10)) == [0, 1, 0, -12, 0, 54, 0, -88, 0, -99]


def test_offsets():
    with pytest.raises(NonIntegralOffset):
        eta_quotient([(1, 1)], 5)
    with pytest.raises(NonIntegralOffset):
        eta_quotient([(1, -24)], 5)


def test_arithmetic():
    f = QSeries([1, 2, 3])
    assert list(f.dilate(2)) == [1, 0, 2, 0, 3]
    assert list(f.shift(1)) == [0, 1, 2]
    assert list(f * f) == [1, 4, 10]
    assert list(f ** 2) == list(f * f)
    assert (f - f).valuation() is None
    assert f.shift(2).valuation() == 2
