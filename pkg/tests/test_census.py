# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import itertools
from collections import Counter

import pytest

from siegel_traces.counting.census import (
    GENUS1_BASE, GENUS2, CensusTally, census_genus1, census_genus2, merge_tallies,
)
from siegel_traces.counting.ffield import field_from_order
from siegel_traces.counting.polynomials import count_curve_points, factor_degree_partition, is_squarefree
from siegel_traces.errors import CapExceeded, MissingEntry, TallyMergeError


def monic_squarefree(F, d):
    for low in itertools.product(range(F.q), repeat=d):
        f = tuple(low) + (1,)
        if is_squarefree(F, f):
            yield f


def marginal(curves: Counter) -> Counter:
    """(nu, a1) counts of a curve histogram."""
    out = Counter()
    for (nu, a1, _), count in curves.items():
        out[(nu, a1)] += count
    return out


# ---------------------------------------------------------
# Agreement with the scalar reference path
# ---------------------------------------------------------

def test_genus2_census_matches_scalar_counts(tallies):
    F = field_from_order(3)
    genus2, _, _ = tallies(3)
    expected = Counter()
    for d in (5, 6):
        for f in monic_squarefree(F, d):
            nu = factor_degree_partition(F, f) + ((1,) if d == 5 else ())
            a1 = F.q + 1 - count_curve_points(F, f, d)
            expected[(tuple(sorted(nu, reverse=True)), a1)] += 1
    assert marginal(genus2.curves) == expected


def test_genus1_census_matches_scalar_counts(tallies):
    F = field_from_order(5)
    _, genus1, _ = tallies(5)
    expected = Counter()
    for f in monic_squarefree(F, 3):
        a1 = F.q + 1 - count_curve_points(F, f, 3)
        expected[(factor_degree_partition(F, f), a1, a1 * a1 - 2 * F.q)] += 1
    assert genus1.curves == expected


# ---------------------------------------------------------
# Self-checks
# ---------------------------------------------------------

@pytest.mark.parametrize("q", [3, 5, 7])
def test_squarefree_totals_and_weil_bounds(tallies, q):
    genus2, genus1, extension = tallies(q)
    assert genus2.monic_count() == (q ** 6 - q ** 5) + (q ** 5 - q ** 4)
    assert genus1.monic_count() == q ** 3 - q ** 2
    assert extension.monic_count() == q ** 6 - q ** 4
    for (_, a1, a2) in genus2.curves:
        assert a1 * a1 <= 16 * q
        assert abs(a2) <= 4 * q
        assert (a2 - a1 * a1) % 2 == 0


def test_odd_twist_entries_vanish(tallies):
    genus2, genus1, _ = tallies(5)
    for tally in (genus2, genus1):
        for (nu, n1, n2), raw in tally.entries.items():
            if n1 % 2:
                assert raw == 0


def test_only_curves_with_rational_weierstrass_points_count_at_identity(tallies):
    genus2, _, _ = tallies(5)
    # x^5 - x is the only squarefree quintic or sextic over F_5 with six rational branch points
    assert genus2.monic_count((1, 1, 1, 1, 1, 1)) == 1
    assert genus2.entry((1, 1, 1, 1, 1, 1), 0, 0) == 4


def test_missing_entry_beyond_weight_cap(tallies):
    genus2, _, _ = tallies(3)
    with pytest.raises(MissingEntry):
        genus2.entry((1, 1, 1, 1, 1, 1), 0, genus2.weight_cap)


def test_re_expanding_keeps_lower_entries():
    F = field_from_order(3)
    small = census_genus1(F, 4, GENUS1_BASE)
    large = census_genus1(F, 4, GENUS1_BASE).expand(8)
    assert large.weight_cap == 8
    for key, raw in small.entries.items():
        assert large.entries[key] == raw


# ---------------------------------------------------------
# Sharding and caps
# ---------------------------------------------------------

def test_sharded_census_equals_unsharded():
    F = field_from_order(5)
    whole = census_genus2(F, 4)
    shards = merge_tallies(census_genus2(F, 4, shard=i, shards=3) for i in range(3))
    assert shards.curves == whole.curves
    assert shards.entries == whole.entries


def test_merge_refuses_other_fields():
    a = CensusTally(3, 1, GENUS2, 4)
    b = CensusTally(5, 1, GENUS2, 4)
    with pytest.raises(TallyMergeError):
        a.merge(b)


def test_census_cap():
    with pytest.raises(CapExceeded):
        census_genus2(field_from_order(7), 2, cap=5)
