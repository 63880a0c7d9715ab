# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import pytest

from siegel_traces.characters.symfunc import s
from siegel_traces.cohomology.motive import (
    CuspSymbol, MotiveExpr, MotiveTracer, SiegelSymbol, cusp_motive, full_space_expansion, motive_trace,
)
from siegel_traces.errors import MissingEigenData


def test_tate_motive_and_weight_two_convention(tracer):
    assert MotiveExpr.tate(1).evaluate(9, tracer) == 9
    assert cusp_motive(1, 2, "full").evaluate(7, tracer) == -8
    assert cusp_motive(4, 2, "full") == MotiveExpr.tate(1, -1) + MotiveExpr.constant(-1)


def test_empty_spaces_vanish():
    assert not cusp_motive(1, 10, "new")
    assert not cusp_motive(4, 8, "new")
    assert cusp_motive(4, 6, "new") == MotiveExpr.symbol(CuspSymbol(4, 6, "new"))


def test_newform_traces_at_prime_powers(tracer):
    phi = cusp_motive(4, 6, "new")
    assert phi.evaluate(3, tracer) == -12
    assert phi.evaluate(9, tracer) == -342
    assert motive_trace(phi.times_tate(1), 5, tracer) == 5 * 54


def test_full_spaces_expand_into_new_parts(tracer):
    assert full_space_expansion(4, 6) == cusp_motive(4, 6, "new")
    full = MotiveExpr.symbol(CuspSymbol(4, 8, "full"))
    assert full.expand_full() == cusp_motive(2, 8, "new") * 2
    assert full.evaluate(3, tracer) == 24


def test_split_signs():
    expr = cusp_motive(2, 8, "new").split_signs()
    assert expr == MotiveExpr.symbol(CuspSymbol(2, 8, "plus")) + MotiveExpr.symbol(CuspSymbol(2, 8, "minus"))


def test_siegel_symbols_are_measured_only(eigen_store):
    F = SiegelSymbol(2, 5)
    with pytest.raises(MissingEigenData):
        MotiveExpr.symbol(F).evaluate(3, MotiveTracer(eigen_store))
    measured = MotiveTracer(eigen_store, {(F, 3): -40})
    assert MotiveExpr.symbol(F, -1).evaluate(3, measured) == 40


def test_representation_coefficients(tracer):
    expr = MotiveExpr.tate(1).tensor(s(4, 2)) + MotiveExpr.constant(s(6))
    assert expr.is_rep_valued
    assert expr.dim() == MotiveExpr.tate(1, 9) + MotiveExpr.constant(1)
    assert expr.contract((4, 2)) == MotiveExpr.tate(1)
    assert expr.contract(("w", 1)) == MotiveExpr.constant(1)
    assert expr.evaluate(5, tracer, (4, 2)) == 5
    with pytest.raises(TypeError):
        expr.tensor(s(6))


def test_polynomial_arithmetic():
    l_plus_one = MotiveExpr.tate(1) + MotiveExpr.constant(1)
    l_minus_one = MotiveExpr.tate(1) - MotiveExpr.constant(1)
    assert l_plus_one.times_polynomial(l_minus_one) == MotiveExpr.tate(2) - MotiveExpr.constant(1)
    assert not (l_plus_one - l_plus_one)
    assert str(MotiveExpr.tate(2, 3)) == "3*L^2"


def test_hecke_coefficient_convention(tracer):
    phi = cusp_motive(2, 8, "new")
    hecke = tracer.with_hecke_coefficients()
    assert phi.evaluate(3, hecke) == phi.evaluate(3, tracer) == 12
    assert phi.evaluate(9, tracer) == 12 ** 2 - 2 * 3 ** 7
    assert phi.evaluate(9, hecke) == 12 ** 2 - 3 ** 7
    assert MotiveExpr.tate(2).evaluate(9, hecke) == 81
    with pytest.raises(ValueError):
        MotiveTracer(tracer.store, elliptic="other")
