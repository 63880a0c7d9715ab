# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import pytest

from siegel_traces.characters.symfunc import s
from siegel_traces.cohomology.formulas import (
    eisenstein_equivariant, eisenstein_total, eisenstein_w1, eisenstein_w3, endoscopy, lift_decomposition,
    lift_leading, lift_trailing, predicted_non_siegel, siegel_weight, strict_endoscopy, weights,
)
from siegel_traces.cohomology.motive import MotiveExpr, SiegelSymbol, cusp_motive
from siegel_traces.cohomology.reference import E_C_TABLE
from siegel_traces.errors import OddWeight


def weight_pairs(max_total, regular_only=False):
    for total in range(0, max_total + 1, 2):
        for m in range(total // 2 + 1):
            l = total - m
            if regular_only and l == m:
                continue
            yield l, m


def test_weights():
    assert weights(4, 2) == (10, 4)
    assert siegel_weight(4, 2) == SiegelSymbol(2, 5)
    assert siegel_weight(7, 1) == SiegelSymbol(6, 4)
    with pytest.raises(OddWeight):
        weights(3, 0)
    with pytest.raises(ValueError):
        weights(1, 3)


# ---------------------------------------------------------
# Eisenstein cohomology
# ---------------------------------------------------------

@pytest.mark.parametrize("l, m", list(weight_pairs(24)))
def test_equivariant_eisenstein_has_the_right_dimension(l, m):
    assert eisenstein_equivariant(l, m).dim().expand_full() == eisenstein_total(l, m).expand_full()


@pytest.mark.parametrize("l, m", list(weight_pairs(16, regular_only=True)))
def test_level_cover_corollaries(l, m):
    eis = eisenstein_equivariant(l, m)
    assert eis.contract(("w", 1)).expand_full() == eisenstein_w1(l, m).expand_full()
    assert eis.contract(("w", 3)).expand_full() == eisenstein_w3(l, m).expand_full()


# ---------------------------------------------------------
# Endoscopy and lifts
# ---------------------------------------------------------

@pytest.mark.parametrize("l, m", list(weight_pairs(12)))
def test_expanded_endoscopy_is_strict_minus_trailing_lifts(l, m, eigen_store):
    expanded = endoscopy(l, m, eigen_store).dim().expand_full().split_signs()
    strict = strict_endoscopy(l, m).expand_full().split_signs()
    trailing = lift_trailing(l, m, eigen_store).dim().expand_full().split_signs()
    assert expanded == strict - trailing


def test_no_lifts_in_weight_two_five(eigen_store):
    assert lift_decomposition(4, 2, eigen_store) == []
    assert not lift_leading(4, 2, eigen_store)


def test_saito_kurokawa_shape(eigen_store):
    # (2,2): k = 8 carries the single level 2 newform, with w_2 = +1
    family, = lift_decomposition(2, 2, eigen_store)
    assert family.rep == s(1, 1, 1, 1, 1, 1)
    assert family.leading == cusp_motive(2, 8, "plus")
    assert family.trailing == MotiveExpr.tate(4) + MotiveExpr.tate(3)


@pytest.mark.parametrize("l, m", [(2, 0), (3, 1)])
def test_prediction_matches_rows_without_siegel_forms(l, m, eigen_store, tracer):
    predicted = predicted_non_siegel(l, m, eigen_store).dim()
    for q in (3, 5, 7):
        assert predicted.evaluate(q, tracer) == E_C_TABLE[(l, m)].expr.evaluate(q, tracer)


def test_equal_weight_convention_gap(eigen_store, tracer):
    predicted = predicted_non_siegel(1, 1, eigen_store).dim()
    for q in (3, 5):
        assert predicted.evaluate(q, tracer) == 5 * q ** 3 - 10 * q ** 2 - 15
