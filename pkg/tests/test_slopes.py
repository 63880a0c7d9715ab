# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
from fractions import Fraction

import pytest

from siegel_traces.checks import slope_checks
from siegel_traces.checks.slope_checks import SlopeChecks
from siegel_traces.cohomology.reference import SLOPE_ROWS, expand
from siegel_traces.cohomology.slopes import CONVENTION_ANDRIANOV, lower_hull, newton_slopes, spinor_coefficients


@pytest.mark.parametrize("row", [row for row in SLOPE_ROWS if row.gated], ids=lambda r: f"{list(r.mu)}@{r.p}")
def test_tabulated_slopes(row):
    l, m = row.lm
    assert newton_slopes(l, m, row.p, expand(row.lam_p), expand(row.lam_p2)) == list(row.slopes)


def test_explicit_slopes():
    assert newton_slopes(5, 3, 3, 216, -312012) == [3, 3, 8, 8]
    assert newton_slopes(5, 3, 3, -360, 141993) == [2, 2, 9, 9]
    assert newton_slopes(5, 3, 5, 2940, 2927975) == [1, 1, 10, 10]


def test_unit_eigenvalue_has_slope_zero():
    row = next(r for r in SLOPE_ROWS if not r.gated)
    slopes = newton_slopes(5, 3, row.p, expand(row.lam_p), expand(row.lam_p2))
    assert expand(row.lam_p) == -5508
    assert slopes[0] == 0
    assert sum(slopes) == 22
    assert slopes != list(row.slopes)


def test_slopes_are_symmetric():
    slopes = newton_slopes(5, 3, 3, 216, -312012)
    assert [11 - s for s in reversed(slopes)] == slopes
    assert all(isinstance(s, Fraction) for s in slopes)


def test_spinor_conventions():
    tabulated = spinor_coefficients(5, 3, 3, 216, -312012)
    andrianov = spinor_coefficients(5, 3, 3, 216, -312012, CONVENTION_ANDRIANOV)
    assert tabulated[2] == 216 ** 2 - 312012 - 3 ** 10
    assert andrianov[2] == 216 ** 2 + 312012 - 3 ** 10
    assert tabulated[4] == andrianov[4] == 3 ** 22
    with pytest.raises(ValueError):
        spinor_coefficients(5, 3, 3, 216, -312012, "unknown")


def test_lower_hull():
    assert lower_hull([(0, 0), (1, 5), (2, 2), (3, 3)]) == [(0, 0), (3, 3)]
    assert lower_hull([(0, 0), (1, 0), (2, 4)]) == [(0, 0), (1, 0), (2, 4)]


# ---------------------------------------------------------
# Check gating
# ---------------------------------------------------------

class _Services:
    tracer = None
    normalization = None

    def cached_fields(self):
        return [3, 5, 9, 25]

    def counts(self, q, weight):
        return q


def test_eigenvalues_stay_gated_on_an_ungated_slope_row(monkeypatch):
    row = next(r for r in SLOPE_ROWS if not r.gated)
    monkeypatch.setattr(slope_checks, "residual_trace", lambda q, *args: -expand(row.lam_p))
    monkeypatch.setattr(slope_checks, "square_eigenvalue", lambda q, *args: expand(row.lam_p2))
    check, = [c for c in SlopeChecks(_Services()).get_checks() if c.name == f"slopes {list(row.mu)} at p=5"]
    lam_p, lam_p2, slopes = check.run()
    assert lam_p.gated and lam_p.passed
    assert lam_p2.gated and lam_p2.passed
    assert not slopes.gated
    assert not slopes.passed
