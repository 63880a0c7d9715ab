# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Shared fixtures: censuses over small fields, built once per session in memory.
"""
from typing import Callable, Dict, Tuple

import pytest

from siegel_traces.cohomology.calibrate import VariantSelection, calibrate
from siegel_traces.cohomology.motive import MotiveTracer
from siegel_traces.counting.census import GENUS1_BASE, GENUS1_EXT, CensusTally, census_genus1, census_genus2
from siegel_traces.counting.ffield import field_from_order, quadratic_extension
from siegel_traces.counting.masses import StackCounts
from siegel_traces.modforms.eigen_store import EigenStore

# l+m up to 10 covers every table row and eigenvalue column checked at small q.
TEST_WEIGHT_CAP = 10


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow censuses")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def eigen_store() -> EigenStore:
    return EigenStore()


@pytest.fixture(scope="session")
def tracer(eigen_store) -> MotiveTracer:
    return MotiveTracer(eigen_store)


@pytest.fixture(scope="session")
def tallies() -> Callable[[int], Tuple[CensusTally, CensusTally, CensusTally]]:
    """q -> (genus-2, genus-1 base, genus-1 extension) tallies over F_q."""
    built: Dict[int, Tuple[CensusTally, CensusTally, CensusTally]] = {}

    def build(q: int):
        if q not in built:
            F = field_from_order(q)
            F2, _ = quadratic_extension(F)
            built[q] = (
                census_genus2(F, TEST_WEIGHT_CAP, cap=q),
                census_genus1(F, TEST_WEIGHT_CAP, GENUS1_BASE, cap=q),
                census_genus1(F2, TEST_WEIGHT_CAP, GENUS1_EXT),
            )
        return built[q]

    return build


@pytest.fixture(scope="session")
def counts_for(tallies) -> Callable[[int, str], StackCounts]:
    made: Dict[Tuple[int, str], StackCounts] = {}

    def make(q: int, kappa: str) -> StackCounts:
        if (q, kappa) not in made:
            made[(q, kappa)] = StackCounts(field_from_order(q), *tallies(q), kappa=kappa)
        return made[(q, kappa)]

    return make


@pytest.fixture(scope="session")
def selection(counts_for, tracer) -> VariantSelection:
    return calibrate(counts_for, tracer)


@pytest.fixture(scope="session")
def counts(counts_for, selection) -> Callable[[int], StackCounts]:
    """Stack counts over F_q under the calibrated kappa."""
    return lambda q: counts_for(q, selection.kappa)


@pytest.fixture(scope="session")
def normalization(selection):
    return selection.normalization
