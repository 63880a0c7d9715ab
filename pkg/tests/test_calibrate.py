# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import pytest

from siegel_traces.cohomology.calibrate import calibrate, candidates
from siegel_traces.cohomology.traces import EXPONENT_CORRECTED, NORMALIZATION_PLAIN, Normalization
from siegel_traces.counting.masses import KAPPA_DOUBLE, KAPPA_LITERAL
from siegel_traces.errors import NoVariantFits


def test_candidates_order():
    variants = candidates()
    assert len(variants) == 8
    assert variants[0] == (KAPPA_LITERAL, Normalization(NORMALIZATION_PLAIN, EXPONENT_CORRECTED))
    assert variants[1] == (KAPPA_DOUBLE, Normalization(NORMALIZATION_PLAIN, EXPONENT_CORRECTED))


def test_selected_variant(selection):
    assert selection.kappa == KAPPA_DOUBLE
    assert selection.normalization == Normalization()
    assert len(selection.outcomes) == 8
    # only the conjugate pair counted with 2 a1(E/k2) matches every oracle
    assert [name for name, ok in selection.outcomes.items() if ok] == [
        "kappa=double, characters=plain, exponent=corrected",
    ]
    flags = selection.flags()
    assert (flags.kappa, flags.normalization, flags.exponent) == ("double", "plain", "corrected")


def test_no_variants(counts_for, tracer):
    with pytest.raises(NoVariantFits):
        calibrate(counts_for, tracer, variants=[])
